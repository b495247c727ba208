// Acceptance suite: one pass/fail line per criterion.
// Usage: acceptance [--criterion N]   (default: run all)

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "sidigraph/analysis.hpp"
#include "sidigraph/closed_form.hpp"
#include "sidigraph/ordering.hpp"
#include "sidigraph/report.hpp"
#include "sidigraph/spectra.hpp"

namespace {

using namespace sidigraph;
using Clock = std::chrono::steady_clock;

struct Failure {
    std::string detail;
};

std::vector<std::string> g_notes;

void note(const std::string& s) { g_notes.push_back(s); }

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// 1. closed forms match the spectral oracle: cycles to order 200, all configs to n = 40
bool criterion_1() {
    const auto start = Clock::now();
    double worst_cycle = 0.0;
    for (int k = 2; k <= 200; ++k)
        for (Sign s : {Sign::positive, Sign::negative}) {
            const CycleSpec c{k, s};
            worst_cycle = std::max(worst_cycle,
                                   std::abs(cycle_energy(c) - energy(cycle_spectrum(c))));
        }
    double worst_config = 0.0;
    long checked = 0;
    for (int n = 4; n <= 40; ++n)
        for (const BicyclicConfig& c : enumerate_class(n)) {
            const double oracle = energy_of_sidigraph(build_adjacency(c));
            worst_config = std::max(worst_config, std::abs(energy_config(c) - oracle));
            ++checked;
        }
    const double elapsed = seconds_since(start);
    note("cycle max diff " + std::to_string(worst_cycle) + ", config max diff " +
         std::to_string(worst_config) + " over " + std::to_string(checked) + " configs, " +
         std::to_string(elapsed) + " s");
    return worst_cycle <= 1e-9 && worst_config <= 1e-9 && elapsed <= 60.0;
}

// 2. predicted extremal configurations reproduced exhaustively for n in [6, 100]
bool criterion_2() {
    const auto start = Clock::now();
    bool ok = true;
    for (int n = 6; n <= 100; ++n) {
        std::vector<Category> cats{Category::even_even, Category::odd_odd};
        if (n % 2 == 1) cats.push_back(Category::mixed);
        for (Category cat : cats) {
            const ExtremalResult r = exhaustive_extremal(n, cat);
            if (!r.max_match || !r.min_match) {
                note("mismatch at n=" + std::to_string(n) + " " + category_name(cat));
                ok = false;
            }
            if (cat == Category::even_even && r.min_energy != 0.0) {
                note("even-even min not exactly 0 at n=" + std::to_string(n));
                ok = false;
            }
            if (cat == Category::odd_odd && std::abs(r.min_energy - 4.0) > 1e-12) {
                note("odd-odd min not 4 at n=" + std::to_string(n));
                ok = false;
            }
            if (cat == Category::mixed && std::abs(r.min_energy - 2.0) > 1e-12) {
                note("mixed min not 2 at n=" + std::to_string(n));
                ok = false;
            }
        }
    }
    const double elapsed = seconds_since(start);
    note(std::to_string(elapsed) + " s");
    return ok && elapsed <= 120.0;
}

// 3. spot values
bool criterion_3() {
    const double expect = 2.0 + 2.0 * std::sqrt(2.0);
    const double closed = energy_config(make_config(7, 4, Sign::negative, 2, Sign::positive));
    const double oracle =
        energy_of_sidigraph(build_adjacency(make_config(7, 4, Sign::negative, 2, Sign::positive)));
    const double six = energy_config(make_config(8, 2, Sign::positive, 6, Sign::positive));
    note("E[4-,2+]=" + std::to_string(closed) + " oracle " + std::to_string(oracle) +
         ", E[2+,6+]=" + std::to_string(six));
    return std::abs(closed - expect) <= 1e-12 && std::abs(oracle - expect) <= 1e-9 &&
           std::abs(six - 6.0) <= 1e-12;
}

// 4. proof bounds for all n = 0 (mod 4) in [8, 200]
bool criterion_4() {
    bool ok = true;
    int first_fail = 0;
    double worst = 0.0;
    for (int n = 8; n <= 200; n += 4) {
        const ProofBoundReport r = proof_bounds_hold(n);
        if (!r.all_hold) {
            ok = false;
            if (!first_fail) first_fail = n;
            worst = std::min(worst, std::min({r.slack_max_lower, r.slack_mixed_upper,
                                              r.slack_pair_upper}));
        }
    }
    if (!ok)
        note("mixed-sign upper bound fails from n=" + std::to_string(first_fail) +
             " (worst slack " + std::to_string(worst) +
             "): its constant 0.2819 under-rounds 2*sqrt(2)-8/pi = 0.28195; see the audited "
             "ledger entries tagged constant-rounding");
    return ok;
}

// 5. all 13 monotone claims at >= 1e3 samples, plus failing negative controls
bool criterion_5() {
    bool ok = true;
    for (int n : {8, 12, 16, 20, 50, 100}) {
        const auto claims = monotone_registry(n);
        if (claims.size() != 13) {
            note("registry size != 13");
            ok = false;
        }
        for (const MonotoneClaim& claim : claims) {
            const MonotoneReport rep = check_monotone(claim, 1000);
            if (!rep.pass) {
                note("claim " + claim.id + " failed at n=" + std::to_string(n));
                ok = false;
            }
        }
        // negative control: flip every direction and require failure
        for (MonotoneClaim claim : claims) {
            for (IntervalDirection& seg : claim.segments) seg.increasing = !seg.increasing;
            if (check_monotone(claim, 1000).pass) {
                note("negative control passed for " + claim.id);
                ok = false;
            }
        }
    }
    return ok;
}

// 6. envelope bounds sampled over their domains, seeded random rational triples
bool criterion_6() {
    constexpr double pi = 3.14159265358979323846;
    for (int i = 0; i < 10000; ++i) {
        const double z = pi / 2 * std::pow(10.0, -6.0 * (9999 - i) / 9999.0);
        if (!cot_bounds_hold(z)) {
            note("cot bound violated at z=" + std::to_string(z));
            return false;
        }
        const double zs = z * (1.0 - 1e-9);
        if (!sin_bounds_hold(zs)) {
            note("sin bound violated at z=" + std::to_string(zs));
            return false;
        }
    }
    std::uint64_t state = 20240915;
    auto next01 = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(state >> 11) / 9007199254740992.0;
    };
    for (int i = 0; i < 1000; ++i) {
        const double e = 0.5 + 9.5 * next01();
        const double d = pi / std::sqrt(e) * (1.0 + 1e-6) + 10.0 * next01();
        const double z = d + 10.0 * next01();
        if (!rational_bound_holds(z, d, e)) {
            note("rational bound violated");
            return false;
        }
    }
    return true;
}

// 7. every catalogued chain over n in [6, 60]: all links pass or the deviation
//    is fenced in the audited ledger, and ledger entries trace to known defects
bool criterion_7() {
    const AuditedLedger ledger = AuditedLedger::embedded();
    bool ok = true;
    long links = 0, deviations = 0, audited = 0;
    for (const ChainCatalogEntry& entry : chain_catalog()) {
        for (int n = 6; n <= 60; ++n) {
            if (!entry.admissible(n)) continue;
            const ChainReport rep = verify_chain(expected_chain(entry.id, n), 1e-9);
            links += static_cast<long>(rep.links.size());
            for (const LinkResult& lr : rep.links) {
                if (lr.pass) continue;
                ++deviations;
                if (ledger.covers_chain_link(rep.chain_id, rep.n, config_to_string(lr.link.lhs),
                                             config_to_string(lr.link.rhs),
                                             relation_symbol(lr.link.relation))) {
                    ++audited;
                } else {
                    note("unexplained deviation: " + rep.chain_id + " n=" + std::to_string(n) +
                         " " + config_to_string(lr.link.lhs) + " vs " +
                         config_to_string(lr.link.rhs));
                    ok = false;
                }
            }
        }
    }
    for (const AuditedDeviation& d : ledger.entries()) {
        const bool known = d.reason == "tie-csc2-cot4" || d.reason == "dominance-range" ||
                           d.reason == "printed-direction" || d.reason == "constant-rounding";
        if (!known) {
            note("ledger entry with unknown reason: " + d.reason);
            ok = false;
        }
    }
    note(std::to_string(links) + " links, " + std::to_string(deviations) + " deviations, " +
         std::to_string(audited) + " audited");
    return ok;
}

// 8. repeated verify runs over 6..40 are byte-identical
bool criterion_8() {
    auto capture = []() {
        const std::string cmd =
            std::string(SIDIGRAPH_CLI_PATH) + " verify --n-range 6..40 2>/dev/null";
        std::array<char, 8192> buf{};
        std::string out;
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) return std::pair<int, std::string>{-1, ""};
        std::size_t got;
        while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
        const int status = pclose(pipe);
        return std::pair<int, std::string>{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
    };
    const auto a = capture();
    const auto b = capture();
    note("exit " + std::to_string(a.first) + ", " + std::to_string(a.second.size()) + " bytes");
    return a.first == 0 && b.first == 0 && !a.second.empty() && a.second == b.second;
}

struct Criterion {
    int id;
    const char* title;
    bool (*run)();
};

const Criterion criteria[] = {
    {1, "oracle equivalence (cycles to 200, configs to n=40, within 1e-9)", criterion_1},
    {2, "predicted extremal configurations reproduced for n in [6,100]", criterion_2},
    {3, "spot values 2+2sqrt(2) and 6", criterion_3},
    {4, "proof bounds for n = 0 (mod 4), 8 <= n <= 200", criterion_4},
    {5, "13 monotone claims pass dense sampling; negative controls fail", criterion_5},
    {6, "cot/sin envelopes and rational bound over sampled domains", criterion_6},
    {7, "all catalogued chains for n in [6,60] pass or are fenced", criterion_7},
    {8, "byte-identical repeated verify reports", criterion_8},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (only && c.id != only) continue;
        g_notes.clear();
        const bool pass = c.run();
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.title
                  << "\n";
        for (const std::string& n : g_notes) std::cout << "       " << n << "\n";
        if (!pass) ++failures;
    }
    return failures;
}
