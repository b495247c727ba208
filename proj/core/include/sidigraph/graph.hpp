#ifndef SIDIGRAPH_GRAPH_HPP
#define SIDIGRAPH_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sidigraph {

// Arc weight of a signed digraph: +1 or -1.
enum class Sign : std::int8_t { positive = +1, negative = -1 };

constexpr Sign flip(Sign s) {
    return s == Sign::positive ? Sign::negative : Sign::positive;
}

constexpr int sign_value(Sign s) { return static_cast<int>(s); }
constexpr char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

// A signed directed cycle: order k >= 2, overall sign = product of arc signs.
struct CycleSpec {
    int order = 2;
    Sign sign = Sign::positive;

    friend auto operator<=>(const CycleSpec&, const CycleSpec&) = default;
};

// Two vertex-disjoint signed cycles plus n - p - q isolated vertices,
// kept in canonical form: (first.order, first.sign) <= (second.order, second.sign)
// with positive ordered before negative.
struct BicyclicConfig {
    int n = 4;
    CycleSpec first;
    CycleSpec second;

    friend bool operator==(const BicyclicConfig&, const BicyclicConfig&) = default;
};

// Canonicalizing constructor; validates invariants (orders >= 2, p + q <= n).
BicyclicConfig make_config(int n, CycleSpec a, CycleSpec b);
BicyclicConfig make_config(int n, int p, Sign sp, int q, Sign sq);

bool same_cycles(const BicyclicConfig& a, const BicyclicConfig& b);

// "[2+,6-]"
std::string config_to_string(const BicyclicConfig& c);

struct Arc {
    int from = 0;
    int to = 0;
    Sign sign = Sign::positive;
};

struct SignedDigraph {
    int vertex_count = 0;
    std::vector<Arc> arcs;
};

struct ComponentList {
    std::vector<std::vector<int>> components;  // partition of [0, n), each strongly connected
};

// Digraph realization of a config: vertices 0..p-1 form the first cycle,
// p..p+q-1 the second, the rest are isolated.  All arcs carry +1 except the
// closing arc w_k -> w_1 of a negative cycle, which carries -1 (only the
// product of arc signs matters).
SignedDigraph build_adjacency(const BicyclicConfig& config);

// Strongly connected components, listed by smallest contained vertex,
// vertices ascending within each component.
ComponentList strong_components(const SignedDigraph& g);

// All canonical configs with 2 <= p, q and p + q <= n, each isomorphism class
// once, ordered by (p, q, first sign, second sign).  Requires n >= 4.
std::vector<BicyclicConfig> enumerate_class(int n);

}  // namespace sidigraph

#endif
