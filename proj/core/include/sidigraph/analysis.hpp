#ifndef SIDIGRAPH_ANALYSIS_HPP
#define SIDIGRAPH_ANALYSIS_HPP

#include <string>
#include <vector>

namespace sidigraph {

// One claimed monotone phase of a registry function.
struct IntervalDirection {
    double lo = 0.0;
    double hi = 0.0;
    bool increasing = true;
};

// A registry function with its claimed monotone phases for a fixed n.
// Most claims have one phase; the vee-shaped ones have two.
struct MonotoneClaim {
    std::string id;
    int n = 0;
    double (*eval)(int n, double z) = nullptr;
    std::vector<IntervalDirection> segments;
};

struct MonotoneReport {
    std::string id;
    int n = 0;
    int samples = 0;
    int violations = 0;
    double worst_violation = 0.0;  // most negative directed step, 0 if none
    double min_slope = 0.0;
    double max_slope = 0.0;
    bool pass = false;
};

// The 13 monotone claims used by the ordering arguments (two for the
// cot+cot phases, two for the kernel pair, three vee-shaped ones carrying
// two interval-direction segments each).  Unbounded intervals are truncated
// at 1e6 for sampling.
std::vector<MonotoneClaim> monotone_registry(int n);

// Samples each segment at `samples` equally spaced points; a violation is an
// adjacent pair stepping against the claimed direction by more than 1e-12.
MonotoneReport check_monotone(const MonotoneClaim& claim, int samples);

// 1/z - 0.429 z <= cot z <= 1/z - z/3 on (0, pi/2], within 1e-12 slack.
bool cot_bounds_hold(double z);

// z - z^3/6 <= sin z <= z on (0, pi/2).
bool sin_bounds_hold(double z);

// pi z / (e z^2 - pi^2) <= pi d / (e d^2 - pi^2) for z >= d > 0, e > 0 and
// positive denominators (reported as out-of-domain otherwise).
bool rational_bound_holds(double z, double d, double e);

// Envelope inequalities used by the even-even maximal-energy argument,
// n = 0 (mod 4), n > 5.  Slack = bound side minus the constrained side;
// negative slack means the printed inequality fails at this n.
struct ProofBoundReport {
    int n = 0;
    double slack_max_lower = 0.0;    // E[2+,(n-2)+]  >= 2n/pi + 0.7267
    double slack_mixed_upper = 0.0;  // E[4-,(n-4)+]  <= 2n/pi + 0.2819 - 2pi/(3(n-4))
    double slack_pair_upper = 0.0;   // E[4-,(n-4)-]  <= 2n/pi + 0.5737
    bool max_lower_holds = false;
    bool mixed_upper_holds = false;
    bool pair_upper_holds = false;
    bool all_hold = false;
};

ProofBoundReport proof_bounds_hold(int n);

}  // namespace sidigraph

#endif
