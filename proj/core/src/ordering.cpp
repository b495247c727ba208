#include "sidigraph/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "sidigraph/closed_form.hpp"

namespace sidigraph {

namespace {

constexpr Sign P = Sign::positive;
constexpr Sign N = Sign::negative;

// builder state: configs with the relation carried to the next one
struct Seq {
    int n;
    std::vector<std::pair<BicyclicConfig, Relation>> items;

    void add(int p, Sign sp, int q, Sign sq, Relation rel = Relation::greater) {
        BicyclicConfig c = make_config(n, p, sp, q, sq);
        if (!items.empty() && same_cycles(items.back().first, c)) return;  // merge pivots
        items.emplace_back(c, rel);
    }

    // mark the relation *after* the given cycles as '='
    void mark_equal_after(int p, Sign sp, int q, Sign sq) {
        const BicyclicConfig c = make_config(n, p, sp, q, sq);
        for (auto& [cfg, rel] : items)
            if (same_cycles(cfg, c)) rel = Relation::equal;
    }

    std::vector<ChainLink> links() const {
        std::vector<ChainLink> out;
        for (std::size_t i = 0; i + 1 < items.size(); ++i)
            out.push_back(ChainLink{items[i].first, items[i + 1].first, items[i].second});
        return out;
    }
};

// arithmetic progressions, inclusive, possibly empty
std::vector<int> up(int from, int to, int step = 4) {
    std::vector<int> v;
    for (int r = from; r <= to; r += step) v.push_back(r);
    return v;
}
std::vector<int> down(int from, int to, int step = 4) {
    std::vector<int> v;
    for (int r = from; r >= to; r -= step) v.push_back(r);
    return v;
}

int largest_le(int mod4, double limit) {
    int r = static_cast<int>(std::floor(limit));
    while (((r % 4) + 4) % 4 != mod4) --r;
    return r;
}
int smallest_ge(int mod4, double limit) {
    int r = static_cast<int>(std::ceil(limit));
    while (((r % 4) + 4) % 4 != mod4) ++r;
    return r;
}

int even_total(int n) { return n % 2 == 0 ? n : n - 1; }

// ---- even-even family runs (t = total order of the two cycles) ----

// [r+, (t-r)-]: ascending r = 2 (mod 4) up to t/2, then descending
// r = 0 (mod 4) down to 4 (the down run always ends at the r = 4 pivot).
void pos_neg_vee(Seq& s, int t) {
    for (int r : up(2, t / 2)) s.add(r, P, t - r, N);
    for (int r : down(std::max(largest_le(0, t / 2.0), 4), 4)) s.add(r, P, t - r, N);
}

// [r-, (t-r)+]: ascending r = 0 (mod 4), then descending r = 2 (mod 4).
void neg_pos_vee(Seq& s, int t) {
    std::vector<int> rise = up(4, t / 2);
    if (rise.empty()) rise.push_back(4);
    for (int r : rise) s.add(r, N, t - r, P);
    for (int r : down(largest_le(2, t / 2.0), 2)) s.add(r, N, t - r, P);
}

// [r-, (t-r)-], t = 0 (mod 4)
void neg_neg_vee(Seq& s, int t) {
    for (int r : up(4, t / 2)) s.add(r, N, t - r, N);
    for (int r : down(largest_le(2, t / 2.0), 2)) s.add(r, N, t - r, N);
}

// t = 0 (mod 4) full-range monotone runs
void pos_neg_desc0(Seq& s, int t) {
    for (int r : down(t - 4, 4)) s.add(r, P, t - r, N);
}
void pos_neg_asc2(Seq& s, int t) {
    for (int r : up(2, t - 2)) s.add(r, P, t - r, N);
}

// t = 2 (mod 4) negative pair, corrected direction (energy decreases as the
// 0 (mod 4) cycle shrinks) and the direction the source displays print.
void neg_neg_corrected(Seq& s, int t) {
    for (int r : up(4, t - 2)) s.add(r, N, t - r, N);
}
void neg_neg_printed(Seq& s, int t) {
    for (int r : up(2, t - 4)) s.add(r, N, t - r, N);
}

// ---- catalogued chains ----

OrderingChain build_even_a(int n) {
    const int t = even_total(n);
    Seq s{n, {}};
    if (t % 4 == 2) {
        pos_neg_vee(s, t);
        pos_neg_asc2(s, t - 2);
        for (int m : down(t - 8, 2)) s.add(2, N, m, P);
        s.add(2, N, 2, N);
        s.mark_equal_after(4, P, t - 4, N);
    } else {
        pos_neg_desc0(s, t);
        pos_neg_vee(s, t - 2);
        pos_neg_asc2(s, t - 4);
        for (int m : down(t - 10, 2)) s.add(2, N, m, P);
        s.add(2, N, 2, N);
        s.mark_equal_after(4, P, t - 4, N);
        s.mark_equal_after(4, P, t - 6, N);
    }
    return OrderingChain{"even-complete-a", n, s.links()};
}

OrderingChain build_even_b(int n) {
    const int t = even_total(n);
    Seq s{n, {}};
    if (t % 4 == 2) {
        neg_pos_vee(s, t);
        for (int m : down(t - 6, 4)) s.add(2, N, m, P);
        s.add(2, N, 2, P);  // the displayed tail ties here: E(C_4) = E(C_2)
        s.add(2, N, 2, N);
    } else {
        pos_neg_asc2(s, t);
        for (int m : down(t - 6, 2)) s.add(2, N, m, P);
        s.add(2, N, 2, N);
    }
    return OrderingChain{"even-complete-b", n, s.links()};
}

OrderingChain build_even_c(int n) {
    const int t = even_total(n);
    Seq s{n, {}};
    neg_neg_vee(s, t);
    for (int m : down(t - 6, 2)) s.add(2, N, m, N);
    return OrderingChain{"even-complete-c", n, s.links()};
}

OrderingChain build_even_posneg_a(int n) {
    const int t = even_total(n);
    Seq s{n, {}};
    t % 4 == 2 ? pos_neg_vee(s, t) : pos_neg_desc0(s, t);
    return OrderingChain{"even-posneg-a", n, s.links()};
}

OrderingChain build_even_posneg_b(int n) {
    const int t = even_total(n);
    Seq s{n, {}};
    t % 4 == 2 ? neg_pos_vee(s, t) : pos_neg_asc2(s, t);
    return OrderingChain{"even-posneg-b", n, s.links()};
}

OrderingChain build_even_negneg(int n) {
    const int t = even_total(n);
    Seq s{n, {}};
    t % 4 == 0 ? neg_neg_vee(s, t) : neg_neg_corrected(s, t);
    return OrderingChain{"even-negneg", n, s.links()};
}

OrderingChain build_even_negneg_printed(int n) {
    const int t = even_total(n);
    Seq s{n, {}};
    neg_neg_printed(s, t);
    return OrderingChain{"even-negneg-printed", n, s.links()};
}

OrderingChain star_chain(std::string id, int n, const BicyclicConfig& top,
                         const std::vector<BicyclicConfig>& family) {
    OrderingChain chain{std::move(id), n, {}};
    for (const BicyclicConfig& c : family)
        if (!same_cycles(c, top)) chain.links.push_back(ChainLink{top, c, Relation::at_least});
    return chain;
}

std::vector<BicyclicConfig> unique_configs(const std::vector<BicyclicConfig>& v) {
    std::vector<BicyclicConfig> out;
    for (const BicyclicConfig& c : v) {
        bool seen = false;
        for (const BicyclicConfig& u : out) seen = seen || same_cycles(u, c);
        if (!seen) out.push_back(c);
    }
    return out;
}

OrderingChain build_even_pospos_top(int n) {
    const int t = even_total(n);
    std::vector<BicyclicConfig> fam;
    for (int r = 2; r <= t - 2; r += 2) fam.push_back(make_config(n, r, P, t - r, P));
    return star_chain("even-pospos-top", n, make_config(n, 2, P, t - 2, P), unique_configs(fam));
}

OrderingChain build_even_negfirst_top_0mod4(int n) {
    const int t = even_total(n);
    std::vector<BicyclicConfig> fam;
    for (int r = 4; r <= t - 2; r += 4) fam.push_back(make_config(n, r, N, t - r, P));
    return star_chain("even-negfirst-top-0mod4", n, make_config(n, 4, N, t - 4, P), fam);
}

OrderingChain build_even_negfirst_top_2mod4(int n) {
    const int t = even_total(n);
    std::vector<BicyclicConfig> fam;
    for (int r = 2; r <= t - 2; r += 4) fam.push_back(make_config(n, r, N, t - r, P));
    return star_chain("even-negfirst-top-2mod4", n, make_config(n, t - 2, N, 2, P), fam);
}

OrderingChain build_even_negfirst_top_printed(int n) {
    const int t = even_total(n);
    std::vector<BicyclicConfig> fam;
    for (int r = 2; r <= t - 2; r += 2) fam.push_back(make_config(n, r, N, t - r, P));
    return star_chain("even-negfirst-top-printed", n, make_config(n, 4, N, t - 4, P), fam);
}

OrderingChain build_even_negfirst_top_halfrange(int n) {
    const int t = even_total(n);
    std::vector<BicyclicConfig> fam;
    for (int r = 2; r <= t / 2; r += 2) fam.push_back(make_config(n, r, N, t - r, P));
    return star_chain("even-negfirst-top-halfrange", n, make_config(n, 4, N, t - 4, P), fam);
}

OrderingChain build_even_posfirst_top(int n) {
    const int t = even_total(n);
    std::vector<BicyclicConfig> fam;
    for (int r = 2; r <= t - 2; r += 2) fam.push_back(make_config(n, r, P, t - r, N));
    return star_chain("even-posfirst-top", n, make_config(n, 2, P, t - 2, N), fam);
}

OrderingChain build_even_negneg_top(int n) {
    const int t = even_total(n);
    std::vector<BicyclicConfig> fam;
    for (int r = 2; r <= t - 2; r += 2) fam.push_back(make_config(n, r, N, t - r, N));
    return star_chain("even-negneg-top", n, make_config(n, 4, N, t - 4, N), unique_configs(fam));
}

OrderingChain build_even_negneg_top_printed(int n) {
    const int t = even_total(n);
    std::vector<BicyclicConfig> fam;
    for (int r = 2; r <= t - 2; r += 2) fam.push_back(make_config(n, r, N, t - r, N));
    return star_chain("even-negneg-top-printed", n, make_config(n, 2, N, t - 2, N),
                      unique_configs(fam));
}

// ---- odd-odd ----

int odd_run_top(int t) {
    const int half = t / 2;
    return half % 2 == 1 ? half : half - 1;
}

OrderingChain build_odd_adjacent(int n) {
    const int t = even_total(n);
    Seq s{n, {}};
    for (int r : up(3, odd_run_top(t), 2)) s.add(r, P, t - r, P);
    return OrderingChain{"odd-adjacent", n, s.links()};
}

OrderingChain build_odd_complete(int n) {
    const int t = even_total(n);
    const int top = odd_run_top(t);
    Seq s{n, {}};
    for (int r : up(3, top, 2)) s.add(r, P, t - r, P);
    for (int r : down(top - 2, 3, 2)) s.add(r, P, t - top, P);
    for (int m : down(t - top - 2, 3, 2)) s.add(3, P, m, P);
    return OrderingChain{"odd-complete", n, s.links()};
}

OrderingChain build_odd_pospos_top(int n) {
    const int t = even_total(n);
    std::vector<BicyclicConfig> fam;
    for (int r = 3; r <= t - 3; r += 2) fam.push_back(make_config(n, r, P, t - r, P));
    return star_chain("odd-pospos-top", n, make_config(n, 3, P, t - 3, P), unique_configs(fam));
}

// ---- mixed parity (n odd): even cycle order r, odd partner n - r ----

int mixed_high_start(int n, int mod4) {
    // largest admissible even r of the residue class (partner must be >= 3)
    return largest_le(mod4, n - 3);
}

OrderingChain build_mixed_pos_low(int n) {
    Seq s{n, {}};
    for (int r : up(2, largest_le(2, 2.0 * n / 3.0))) s.add(r, P, n - r, P);
    return OrderingChain{"mixed-pospos-low", n, s.links()};
}

OrderingChain build_mixed_pos_high(int n) {
    Seq s{n, {}};
    const int hi = smallest_ge(2, 2.0 * n / 3.0);
    for (int r : down(mixed_high_start(n, 2), hi)) s.add(r, P, n - r, P);
    return OrderingChain{"mixed-pospos-high", n, s.links()};
}

OrderingChain build_mixed_pos_0mod4(int n) {
    Seq s{n, {}};
    for (int r : down(mixed_high_start(n, 0), 4)) s.add(r, P, n - r, P);
    return OrderingChain{"mixed-pospos-0mod4", n, s.links()};
}

OrderingChain build_mixed_neg_low(int n) {
    Seq s{n, {}};
    for (int r : up(4, largest_le(0, 2.0 * n / 3.0))) s.add(r, N, n - r, N);
    return OrderingChain{"mixed-negneg-low", n, s.links()};
}

OrderingChain build_mixed_neg_high(int n) {
    Seq s{n, {}};
    const int hi = smallest_ge(0, 2.0 * n / 3.0);
    for (int r : down(mixed_high_start(n, 0), hi)) s.add(r, N, n - r, N);
    return OrderingChain{"mixed-negneg-high", n, s.links()};
}

OrderingChain build_mixed_neg_2mod4(int n) {
    Seq s{n, {}};
    for (int r : down(mixed_high_start(n, 2), 2)) s.add(r, N, n - r, N);
    return OrderingChain{"mixed-negneg-2mod4", n, s.links()};
}

OrderingChain build_mixed_complete_pos_low(int n) {
    Seq s{n, {}};
    const int R = largest_le(2, 2.0 * n / 3.0);
    for (int r : up(2, R)) s.add(r, P, n - r, P);
    for (int r : down(R - 4, 2)) s.add(r, P, n - R, P);
    for (int m : down(n - R - 2, 3, 2)) s.add(2, P, m, P);
    return OrderingChain{"mixed-complete-pos-low", n, s.links()};
}

// which coordinate the source display walks down first after the pivot
bool pos_high_second_first(int n) {
    static const std::map<std::pair<int, int>, bool> table = {
        {{0, 1}, true}, {{0, 3}, false}, {{1, 1}, false},
        {{1, 3}, true}, {{2, 1}, false}, {{2, 3}, true},
    };
    return table.at({n % 3, n % 4});
}

OrderingChain build_mixed_complete_pos_high(int n) {
    Seq s{n, {}};
    const int start = mixed_high_start(n, 2);
    const int R = smallest_ge(2, 2.0 * n / 3.0);
    if (start < R) return OrderingChain{"mixed-complete-pos-high", n, {}};
    for (int r : down(start, R)) s.add(r, P, n - r, P);
    if (pos_high_second_first(n)) {
        for (int m : down(n - R - 2, 3, 2)) s.add(R, P, m, P);
        for (int r : down(R - 4, 2)) s.add(r, P, 3, P);
    } else {
        for (int r : down(R - 4, 2)) s.add(r, P, n - R, P);
        for (int m : down(n - R - 2, 3, 2)) s.add(2, P, m, P);
    }
    return OrderingChain{"mixed-complete-pos-high", n, s.links()};
}

OrderingChain build_mixed_complete_pos_0mod4(int n) {
    Seq s{n, {}};
    for (int r : down(mixed_high_start(n, 0), 4)) s.add(r, P, n - r, P);
    for (int m : down(n - 6, 3, 2)) s.add(4, P, m, P);
    s.add(2, P, 3, P);  // the displayed tail ties here: E(C_4) = E(C_2)
    return OrderingChain{"mixed-complete-pos-0mod4", n, s.links()};
}

OrderingChain build_mixed_complete_neg_low(int n) {
    Seq s{n, {}};
    const int R = largest_le(0, 2.0 * n / 3.0);
    if (R >= 4) {
        for (int r : up(4, R)) s.add(r, N, n - r, N);
        for (int r : down(R - 4, 4)) s.add(r, N, n - R, N);
        for (int m : down(n - R - 2, 3, 2)) s.add(4, N, m, N);
        s.add(2, N, 3, N);
    }
    return OrderingChain{"mixed-complete-neg-low", n, s.links()};
}

OrderingChain build_mixed_complete_neg_high(int n) {
    Seq s{n, {}};
    const int start = mixed_high_start(n, 0);
    const int R = smallest_ge(0, 2.0 * n / 3.0);
    if (start < R) return OrderingChain{"mixed-complete-neg-high", n, {}};
    for (int r : down(start, R)) s.add(r, N, n - r, N);
    if ((n - 3) % 4 == 0) {
        for (int m : down(n - R - 2, 3, 2)) s.add(R, N, m, N);
        for (int r : down(R - 4, 4)) s.add(r, N, 3, N);
    } else {
        for (int r : down(R - 4, 4)) s.add(r, N, n - R, N);
        for (int m : down(n - R - 2, 3, 2)) s.add(4, N, m, N);
    }
    s.add(2, N, 3, N);
    return OrderingChain{"mixed-complete-neg-high", n, s.links()};
}

OrderingChain build_mixed_complete_neg_2mod4(int n) {
    Seq s{n, {}};
    for (int r : down(mixed_high_start(n, 2), 2)) s.add(r, N, n - r, N);
    for (int m : down(n - 4, 3, 2)) s.add(2, N, m, N);
    s.add(2, N, 2, N);
    return OrderingChain{"mixed-complete-neg-2mod4", n, s.links()};
}

// ---- catalog ----

bool any_n(int n) { return n > 5; }
bool total_0mod4(int n) { return n > 5 && even_total(n) % 4 == 0; }
bool total_2mod4(int n) { return n > 5 && even_total(n) % 4 == 2; }
bool odd_n(int n) { return n > 5 && n % 2 == 1; }

using Builder = OrderingChain (*)(int);

const std::vector<std::pair<ChainCatalogEntry, Builder>>& catalog_impl() {
    static const std::vector<std::pair<ChainCatalogEntry, Builder>> entries = {
        {{"even-posneg-a", Category::even_even, any_n, false}, build_even_posneg_a},
        {{"even-posneg-b", Category::even_even, any_n, false}, build_even_posneg_b},
        {{"even-negneg", Category::even_even, any_n, false}, build_even_negneg},
        {{"even-negneg-printed", Category::even_even, total_2mod4, true}, build_even_negneg_printed},
        {{"even-pospos-top", Category::even_even, any_n, false}, build_even_pospos_top},
        {{"even-negfirst-top-0mod4", Category::even_even, total_0mod4, false},
         build_even_negfirst_top_0mod4},
        {{"even-negfirst-top-2mod4", Category::even_even, total_0mod4, false},
         build_even_negfirst_top_2mod4},
        {{"even-negfirst-top-printed", Category::even_even, total_2mod4, true},
         build_even_negfirst_top_printed},
        {{"even-negfirst-top-halfrange", Category::even_even, total_2mod4, false},
         build_even_negfirst_top_halfrange},
        {{"even-posfirst-top", Category::even_even, total_2mod4, false}, build_even_posfirst_top},
        {{"even-negneg-top", Category::even_even, any_n, false}, build_even_negneg_top},
        {{"even-negneg-top-printed", Category::even_even, total_2mod4, true},
         build_even_negneg_top_printed},
        {{"even-complete-a", Category::even_even, any_n, false}, build_even_a},
        {{"even-complete-b", Category::even_even, any_n, false}, build_even_b},
        {{"even-complete-c", Category::even_even, total_0mod4, false}, build_even_c},
        {{"odd-adjacent", Category::odd_odd, any_n, false}, build_odd_adjacent},
        {{"odd-pospos-top", Category::odd_odd, any_n, false}, build_odd_pospos_top},
        {{"odd-complete", Category::odd_odd, any_n, false}, build_odd_complete},
        {{"mixed-pospos-low", Category::mixed, odd_n, false}, build_mixed_pos_low},
        {{"mixed-pospos-high", Category::mixed, odd_n, false}, build_mixed_pos_high},
        {{"mixed-pospos-0mod4", Category::mixed, odd_n, false}, build_mixed_pos_0mod4},
        {{"mixed-negneg-low", Category::mixed, odd_n, false}, build_mixed_neg_low},
        {{"mixed-negneg-high", Category::mixed, odd_n, false}, build_mixed_neg_high},
        {{"mixed-negneg-2mod4", Category::mixed, odd_n, false}, build_mixed_neg_2mod4},
        {{"mixed-complete-pos-low", Category::mixed, odd_n, false}, build_mixed_complete_pos_low},
        {{"mixed-complete-pos-high", Category::mixed, odd_n, false}, build_mixed_complete_pos_high},
        {{"mixed-complete-pos-0mod4", Category::mixed, odd_n, false},
         build_mixed_complete_pos_0mod4},
        {{"mixed-complete-neg-low", Category::mixed, odd_n, false}, build_mixed_complete_neg_low},
        {{"mixed-complete-neg-high", Category::mixed, odd_n, false}, build_mixed_complete_neg_high},
        {{"mixed-complete-neg-2mod4", Category::mixed, odd_n, false},
         build_mixed_complete_neg_2mod4},
    };
    return entries;
}

}  // namespace

const char* category_name(Category c) {
    switch (c) {
        case Category::even_even: return "even-even";
        case Category::odd_odd: return "odd-odd";
        case Category::mixed: return "mixed";
    }
    return "?";
}

Category category_from_name(const std::string& name) {
    if (name == "even-even") return Category::even_even;
    if (name == "odd-odd") return Category::odd_odd;
    if (name == "mixed") return Category::mixed;
    throw std::invalid_argument("unknown category: " + name);
}

const char* relation_symbol(Relation r) {
    switch (r) {
        case Relation::greater: return ">";
        case Relation::equal: return "=";
        case Relation::at_least: return ">=";
    }
    return "?";
}

const std::vector<ChainCatalogEntry>& chain_catalog() {
    static const std::vector<ChainCatalogEntry> entries = [] {
        std::vector<ChainCatalogEntry> v;
        for (const auto& [e, b] : catalog_impl()) v.push_back(e);
        return v;
    }();
    return entries;
}

bool chain_admissible(const std::string& chain_id, int n) {
    for (const auto& [e, b] : catalog_impl())
        if (e.id == chain_id) return e.admissible(n);
    throw std::invalid_argument("unknown chain id: " + chain_id);
}

OrderingChain expected_chain(const std::string& chain_id, int n) {
    for (const auto& [e, b] : catalog_impl()) {
        if (e.id != chain_id) continue;
        if (!e.admissible(n))
            throw std::invalid_argument("chain " + chain_id + " is not admissible at n = " +
                                        std::to_string(n));
        return b(n);
    }
    throw std::invalid_argument("unknown chain id: " + chain_id);
}

ChainReport verify_chain(const OrderingChain& chain, double tol) {
    if (!(tol > 0.0 && tol <= 1e-6)) throw std::invalid_argument("tol must be in (0, 1e-6]");
    ChainReport rep;
    rep.chain_id = chain.chain_id;
    rep.n = chain.n;
    for (const ChainLink& link : chain.links) {
        LinkResult r;
        r.link = link;
        r.lhs_energy = energy_config(link.lhs);
        r.rhs_energy = energy_config(link.rhs);
        r.margin = r.lhs_energy - r.rhs_energy;
        switch (link.relation) {
            case Relation::greater: r.pass = r.margin > tol; break;
            case Relation::equal: r.pass = std::abs(r.margin) <= tol; break;
            case Relation::at_least: r.pass = r.margin > -tol; break;
        }
        if (!r.pass) ++rep.deviations;
        rep.links.push_back(r);
    }
    rep.all_pass = rep.deviations == 0;
    return rep;
}

std::vector<BicyclicConfig> category_configs(int n, Category cat) {
    std::vector<BicyclicConfig> out;
    for (const BicyclicConfig& c : enumerate_class(n)) {
        const bool fe = c.first.order % 2 == 0, se = c.second.order % 2 == 0;
        switch (cat) {
            case Category::even_even:
                if (fe && se) out.push_back(c);
                break;
            case Category::odd_odd:
                if (!fe && !se && c.first.sign == Sign::positive &&
                    c.second.sign == Sign::positive)
                    out.push_back(c);
                break;
            case Category::mixed:
                // odd-cycle sign canonicalized to positive
                if (fe != se &&
                    (fe ? c.second.sign : c.first.sign) == Sign::positive)
                    out.push_back(c);
                break;
        }
    }
    return out;
}

ExtremalResult expected_extremal(int n, Category cat) {
    if (n <= 5) throw std::invalid_argument("extremal expectations require n > 5");
    if (cat == Category::mixed && n % 2 == 0)
        throw std::invalid_argument("mixed category requires odd n");
    ExtremalResult r;
    r.n = n;
    r.category = cat;
    switch (cat) {
        case Category::even_even:
            switch (n % 4) {
                case 0: r.expected_max = make_config(n, 2, P, n - 2, P); break;
                case 1: r.expected_max = make_config(n, 2, P, n - 3, P); break;
                case 2: r.expected_max = make_config(n, 2, P, n - 2, N); break;
                default: r.expected_max = make_config(n, 2, P, n - 3, N); break;
            }
            r.expected_min = make_config(n, 2, N, 2, N);
            break;
        case Category::odd_odd:
            r.expected_max = n % 2 == 0 ? make_config(n, 3, P, n - 3, P)
                                        : make_config(n, 3, P, n - 4, P);
            r.expected_min = make_config(n, 3, P, 3, P);
            break;
        case Category::mixed:
            r.expected_max = make_config(n, 2, P, n - 2, P);
            r.expected_min = make_config(n, 2, N, 3, P);
            break;
    }
    r.expected_max_energy = energy_config(r.expected_max);
    r.expected_min_energy = energy_config(r.expected_min);
    return r;
}

ExtremalResult exhaustive_extremal(int n, Category cat) {
    ExtremalResult r = expected_extremal(n, cat);
    const std::vector<BicyclicConfig> fam = category_configs(n, cat);
    if (fam.empty()) throw std::invalid_argument("empty category");
    constexpr double tie_tol = 1e-9;
    double best_max = energy_config(fam.front()), best_min = best_max;
    for (const BicyclicConfig& c : fam) {
        const double e = energy_config(c);
        best_max = std::max(best_max, e);
        best_min = std::min(best_min, e);
    }
    for (const BicyclicConfig& c : fam) {
        const double e = energy_config(c);
        if (std::abs(e - best_max) <= tie_tol) r.max_configs.push_back(c);
        if (std::abs(e - best_min) <= tie_tol) r.min_configs.push_back(c);
    }
    r.max_energy = best_max;
    r.min_energy = best_min;
    auto contains = [](const std::vector<BicyclicConfig>& v, const BicyclicConfig& c) {
        for (const BicyclicConfig& u : v)
            if (same_cycles(u, c)) return true;
        return false;
    };
    r.max_match = contains(r.max_configs, r.expected_max);
    r.min_match = contains(r.min_configs, r.expected_min);
    return r;
}

std::vector<RankedConfig> full_ranking(int n, Category cat) {
    std::vector<RankedConfig> out;
    for (const BicyclicConfig& c : category_configs(n, cat))
        out.push_back(RankedConfig{c, energy_config(c), 0});
    std::stable_sort(out.begin(), out.end(), [](const RankedConfig& a, const RankedConfig& b) {
        return a.energy > b.energy;  // canonical order preserved within ties
    });
    constexpr double tie_tol = 1e-9;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i > 0 && std::abs(out[i].energy - out[i - 1].energy) <= tie_tol)
            out[i].rank = out[i - 1].rank;
        else
            out[i].rank = static_cast<int>(i) + 1;
    }
    return out;
}

}  // namespace sidigraph
