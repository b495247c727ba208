#include "sidigraph/analysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sidigraph/closed_form.hpp"

namespace sidigraph {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double slope_tol = 1e-12;
constexpr double unbounded = 1e6;

double cot(double z) { return std::cos(z) / std::sin(z); }
double csc(double z) { return 1.0 / std::sin(z); }

double cot_cot(int n, double z) { return 2.0 * (cot(pi / z) + cot(pi / (n - z))); }
double csc_cot(int n, double z) { return 2.0 * (csc(pi / z) + cot(pi / (n - z))); }
double csc_csc(int n, double z) { return 2.0 * (csc(pi / z) + csc(pi / (n - z))); }
double z_sin(int, double z) { return z * std::sin(pi / z); }
double cos_csc2(int, double z) { return pi / (z * z) * std::cos(pi / z) * csc(pi / z) * csc(pi / z); }
double half_cos_csc2(int, double z) {
    return pi / (z * z) * std::cos(pi / (2 * z)) * csc(pi / (2 * z)) * csc(pi / (2 * z));
}
double cot_csc(int n, double z) { return 2.0 * (cot(pi / z) + csc(pi / (n - z))); }
double half_csc_pair(int n, double z) { return csc(pi / (2 * z)) + csc(pi / (2 * (n - z))); }
double csc_half_csc(int n, double z) { return 2.0 * csc(pi / z) + csc(pi / (2 * (n - z))); }
double half_csc_csc(int n, double z) { return csc(pi / (2 * z)) + 2.0 * csc(pi / (n - z)); }
double cot_half_csc(int n, double z) { return 2.0 * cot(pi / z) + csc(pi / (2 * (n - z))); }

}  // namespace

std::vector<MonotoneClaim> monotone_registry(int n) {
    if (n <= 4) throw std::invalid_argument("monotone registry requires n > 4");
    const double nn = n;
    return {
        {"cot_cot_up", n, cot_cot, {{2.0, nn / 2, true}}},
        {"cot_cot_down", n, cot_cot, {{nn / 2, nn - 2, false}}},
        {"csc_cot_down", n, csc_cot, {{2.0, nn - 2, false}}},
        {"csc_csc_down", n, csc_csc, {{2.0, nn / 2, false}}},
        {"z_sin_up", n, z_sin, {{2.0, unbounded, true}}},
        {"cos_csc2_up", n, cos_csc2, {{2.0, nn - 2, true}}},
        {"half_cos_csc2_up", n, half_cos_csc2, {{2.0, unbounded, true}}},
        {"cos_csc2_up_unbounded", n, cos_csc2, {{2.0, unbounded, true}}},
        {"cot_csc_up", n, cot_csc, {{2.0, nn - 2, true}}},
        {"half_csc_pair_vee", n, half_csc_pair, {{2.0, nn / 2, false}, {nn / 2, nn - 2, true}}},
        {"csc_half_csc_vee", n, csc_half_csc,
         {{2.0, 2 * nn / 3, false}, {2 * nn / 3, nn - 2, true}}},
        {"half_csc_csc_vee", n, half_csc_csc, {{2.0, nn / 3, false}, {nn / 3, nn - 2, true}}},
        {"cot_half_csc_up", n, cot_half_csc, {{2.0, nn - 2, true}}},
    };
}

MonotoneReport check_monotone(const MonotoneClaim& claim, int samples) {
    if (samples < 2) throw std::invalid_argument("samples must be >= 2");
    MonotoneReport rep;
    rep.id = claim.id;
    rep.n = claim.n;
    rep.samples = samples;
    bool first = true;
    for (const IntervalDirection& seg : claim.segments) {
        if (!(seg.lo < seg.hi)) throw std::invalid_argument("empty claim interval");
        const double h = (seg.hi - seg.lo) / (samples - 1);
        double prev = 0.0;
        for (int i = 0; i < samples; ++i) {
            const double z = seg.lo + h * i;
            const double v = claim.eval(claim.n, z);
            if (i > 0) {
                const double directed = (v - prev) * (seg.increasing ? 1.0 : -1.0);
                if (directed < -slope_tol) {
                    ++rep.violations;
                    rep.worst_violation = std::min(rep.worst_violation, directed);
                }
                const double slope = (v - prev) / h;
                if (first) {
                    rep.min_slope = rep.max_slope = slope;
                    first = false;
                } else {
                    rep.min_slope = std::min(rep.min_slope, slope);
                    rep.max_slope = std::max(rep.max_slope, slope);
                }
            }
            prev = v;
        }
    }
    rep.pass = rep.violations == 0;
    return rep;
}

bool cot_bounds_hold(double z) {
    if (!(z > 0.0 && z <= pi / 2)) throw std::domain_error("cot bounds require z in (0, pi/2]");
    const double c = cot(z);
    const double lower = 1.0 / z - 0.429 * z;
    const double upper = 1.0 / z - z / 3.0;
    // slack scales with the compared magnitudes (1/z grows without bound)
    const double slack = slope_tol * std::max({1.0, std::abs(lower), std::abs(upper)});
    return c >= lower - slack && c <= upper + slack;
}

bool sin_bounds_hold(double z) {
    if (!(z > 0.0 && z < pi / 2)) throw std::domain_error("sin bounds require z in (0, pi/2)");
    const double s = std::sin(z);
    return s >= z - z * z * z / 6.0 - slope_tol && s <= z + slope_tol;
}

bool rational_bound_holds(double z, double d, double e) {
    if (!(z >= d && d > 0.0 && e > 0.0))
        throw std::domain_error("rational bound requires z >= d > 0 and e > 0");
    const double dz = e * z * z - pi * pi;
    const double dd = e * d * d - pi * pi;
    if (!(dz > 0.0 && dd > 0.0))
        throw std::domain_error("rational bound requires positive denominators");
    const double lhs = pi * z / dz, rhs = pi * d / dd;
    return lhs <= rhs + slope_tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

ProofBoundReport proof_bounds_hold(int n) {
    if (n <= 5 || n % 4 != 0)
        throw std::invalid_argument("proof bounds require n = 0 (mod 4), n > 5");
    ProofBoundReport rep;
    rep.n = n;
    const double base = 2.0 * n / pi;

    const double e_max = energy_pos_cycle(2) + energy_pos_cycle(n - 2);
    rep.slack_max_lower = e_max - (base + 0.7267);

    const double e_mixed = energy_neg_cycle(4) + energy_pos_cycle(n - 4);
    rep.slack_mixed_upper = (base + 0.2819 - 2.0 * pi / (3.0 * (n - 4))) - e_mixed;

    const double e_pair = energy_neg_cycle(4) + energy_neg_cycle(n - 4);
    rep.slack_pair_upper = (base + 0.5737) - e_pair;

    rep.max_lower_holds = rep.slack_max_lower >= 0.0;
    rep.mixed_upper_holds = rep.slack_mixed_upper >= 0.0;
    rep.pair_upper_holds = rep.slack_pair_upper >= 0.0;
    rep.all_hold = rep.max_lower_holds && rep.mixed_upper_holds && rep.pair_upper_holds;
    return rep;
}

}  // namespace sidigraph
