#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sidigraph/graph.hpp"
#include "sidigraph/spectra.hpp"

using namespace sidigraph;

namespace {

// independent counting oracle: choose orders p <= q, then a sign multiset
// (3 when p == q, 4 otherwise)
int count_classes_brute(int n) {
    int count = 0;
    for (int p = 2; p <= n; ++p)
        for (int q = p; p + q <= n; ++q) count += (p == q) ? 3 : 4;
    return count;
}

}  // namespace

TEST_CASE("build_adjacency lays out two cycles and isolated remainder") {
    const SignedDigraph g = build_adjacency(make_config(4, 2, Sign::positive, 2, Sign::positive));
    CHECK(g.vertex_count == 4);
    REQUIRE(g.arcs.size() == 4);
    std::set<std::pair<int, int>> arcs;
    for (const Arc& a : g.arcs) {
        CHECK(a.sign == Sign::positive);
        arcs.insert({a.from, a.to});
    }
    CHECK(arcs == std::set<std::pair<int, int>>{{0, 1}, {1, 0}, {2, 3}, {3, 2}});
}

TEST_CASE("negative cycle carries exactly one -1 arc, closing arc by convention") {
    // canonical order puts the positive 2-cycle first, so the negative cycle
    // sits on vertices 2,3 and its closing arc is 3 -> 2
    const SignedDigraph g = build_adjacency(make_config(5, 2, Sign::negative, 2, Sign::positive));
    int negatives = 0;
    for (const Arc& a : g.arcs)
        if (a.sign == Sign::negative) {
            ++negatives;
            CHECK(a.from == 3);
            CHECK(a.to == 2);
        }
    CHECK(negatives == 1);
    CHECK(g.vertex_count == 5);  // vertex 4 isolated
}

TEST_CASE("build_adjacency rejects order sums exceeding n") {
    CHECK_THROWS_AS(make_config(4, 3, Sign::positive, 2, Sign::positive), std::invalid_argument);
    CHECK_THROWS_AS(make_config(5, 1, Sign::positive, 2, Sign::positive), std::invalid_argument);
}

TEST_CASE("strong components of two disjoint 2-cycles") {
    const SignedDigraph g = build_adjacency(make_config(4, 2, Sign::positive, 2, Sign::positive));
    const ComponentList cl = strong_components(g);
    REQUIRE(cl.components.size() == 2);
    CHECK(cl.components[0] == std::vector<int>{0, 1});
    CHECK(cl.components[1] == std::vector<int>{2, 3});
}

TEST_CASE("strong components of a directed path are singletons") {
    SignedDigraph g;
    g.vertex_count = 3;
    g.arcs = {{0, 1, Sign::positive}, {1, 2, Sign::positive}};
    const ComponentList cl = strong_components(g);
    REQUIRE(cl.components.size() == 3);
    for (int v = 0; v < 3; ++v) CHECK(cl.components[v] == std::vector<int>{v});
}

TEST_CASE("isolated vertex is its own strong component") {
    const SignedDigraph g = build_adjacency(make_config(6, 2, Sign::positive, 3, Sign::negative));
    const ComponentList cl = strong_components(g);
    REQUIRE(cl.components.size() == 3);
    std::multiset<std::size_t> sizes;
    for (const auto& c : cl.components) sizes.insert(c.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
}

TEST_CASE("components partition the vertex set") {
    for (int n : {6, 9, 13}) {
        for (const BicyclicConfig& cfg : enumerate_class(n)) {
            const ComponentList cl = strong_components(build_adjacency(cfg));
            std::vector<int> seen;
            for (const auto& c : cl.components) seen.insert(seen.end(), c.begin(), c.end());
            std::sort(seen.begin(), seen.end());
            std::vector<int> all(n);
            for (int v = 0; v < n; ++v) all[v] = v;
            CHECK(seen == all);
        }
    }
}

TEST_CASE("enumerate_class counts") {
    CHECK(enumerate_class(4).size() == 3);  // (2,2) with three sign multisets
    CHECK(enumerate_class(5).size() == 7);
    for (int n = 4; n <= 24; ++n)
        CHECK(enumerate_class(n).size() == static_cast<std::size_t>(count_classes_brute(n)));
    CHECK_THROWS_AS(enumerate_class(3), std::invalid_argument);
}

TEST_CASE("enumerate_class for n=4 lists the three sign multisets in order") {
    const auto classes = enumerate_class(4);
    REQUIRE(classes.size() == 3);
    CHECK(config_to_string(classes[0]) == "[2+,2+]");
    CHECK(config_to_string(classes[1]) == "[2+,2-]");
    CHECK(config_to_string(classes[2]) == "[2-,2-]");
}

TEST_CASE("enumeration is duplicate-free and closed under canonicalization") {
    for (int n : {6, 10, 15}) {
        const auto classes = enumerate_class(n);
        std::set<std::string> keys;
        for (const BicyclicConfig& c : classes) {
            CHECK(std::pair(c.first.order, sign_char(c.first.sign) == '-') <=
                  std::pair(c.second.order, sign_char(c.second.sign) == '-'));
            // re-canonicalizing with swapped cycles lands on the same config
            const BicyclicConfig swapped = make_config(n, c.second, c.first);
            CHECK(same_cycles(swapped, c));
            keys.insert(config_to_string(c));
        }
        CHECK(keys.size() == classes.size());
    }
}

TEST_CASE("moving the -1 arc around a cycle leaves the characteristic polynomial unchanged") {
    // sign-product invariance, exact comparison of integer char polys
    const BicyclicConfig cfg = make_config(9, 4, Sign::negative, 5, Sign::negative);
    const SignedDigraph base = build_adjacency(cfg);
    const IntPolynomial reference = char_poly(base);
    for (std::size_t flip_at = 0; flip_at < 4; ++flip_at) {
        SignedDigraph g = base;
        // make all first-cycle arcs positive, then negate a chosen one
        for (std::size_t i = 0; i < g.arcs.size(); ++i)
            if (g.arcs[i].from < 4) g.arcs[i].sign = Sign::positive;
        std::size_t seen = 0;
        for (std::size_t i = 0; i < g.arcs.size(); ++i) {
            if (g.arcs[i].from < 4 && seen++ == flip_at) g.arcs[i].sign = Sign::negative;
        }
        CHECK(char_poly(g).coeffs == reference.coeffs);
    }
}
