#include "sidigraph/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace sidigraph {

namespace {

std::pair<int, int> key(const CycleSpec& c) {
    // positive sorts before negative
    return {c.order, c.sign == Sign::positive ? 0 : 1};
}

}  // namespace

BicyclicConfig make_config(int n, CycleSpec a, CycleSpec b) {
    if (a.order < 2 || b.order < 2)
        throw std::invalid_argument("cycle order must be >= 2");
    if (a.order + b.order > n)
        throw std::invalid_argument("cycle orders exceed total order n");
    if (key(b) < key(a)) std::swap(a, b);
    return BicyclicConfig{n, a, b};
}

BicyclicConfig make_config(int n, int p, Sign sp, int q, Sign sq) {
    return make_config(n, CycleSpec{p, sp}, CycleSpec{q, sq});
}

bool same_cycles(const BicyclicConfig& a, const BicyclicConfig& b) {
    return a.first == b.first && a.second == b.second;
}

std::string config_to_string(const BicyclicConfig& c) {
    std::string s = "[";
    s += std::to_string(c.first.order);
    s += sign_char(c.first.sign);
    s += ',';
    s += std::to_string(c.second.order);
    s += sign_char(c.second.sign);
    s += ']';
    return s;
}

SignedDigraph build_adjacency(const BicyclicConfig& config) {
    make_config(config.n, config.first, config.second);  // re-validate
    SignedDigraph g;
    g.vertex_count = config.n;
    auto add_cycle = [&g](int base, const CycleSpec& c) {
        for (int j = 0; j < c.order - 1; ++j)
            g.arcs.push_back(Arc{base + j, base + j + 1, Sign::positive});
        g.arcs.push_back(Arc{base + c.order - 1, base, c.sign});
    };
    add_cycle(0, config.first);
    add_cycle(config.first.order, config.second);
    return g;
}

ComponentList strong_components(const SignedDigraph& g) {
    const int n = g.vertex_count;
    std::vector<std::vector<int>> adj(n);
    for (const Arc& a : g.arcs) {
        if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
            throw std::invalid_argument("arc endpoint out of range");
        adj[a.from].push_back(a.to);
    }

    // iterative Tarjan
    std::vector<int> index(n, -1), lowlink(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    int next_index = 0;

    struct Frame {
        int v;
        std::size_t child;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.child < adj[f.v].size()) {
                int w = adj[f.v][f.child++];
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back(Frame{w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                if (lowlink[f.v] == index[f.v]) {
                    std::vector<int> comp;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                    } while (w != f.v);
                    std::sort(comp.begin(), comp.end());
                    comps.push_back(std::move(comp));
                }
                int v = f.v;
                call.pop_back();
                if (!call.empty())
                    lowlink[call.back().v] = std::min(lowlink[call.back().v], lowlink[v]);
            }
        }
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return ComponentList{std::move(comps)};
}

std::vector<BicyclicConfig> enumerate_class(int n) {
    if (n < 4) throw std::invalid_argument("enumerate_class requires n >= 4");
    static constexpr Sign signs[2] = {Sign::positive, Sign::negative};
    std::vector<BicyclicConfig> out;
    for (int p = 2; p + 2 <= n; ++p) {
        for (int q = p; p + q <= n; ++q) {
            for (Sign sp : signs) {
                for (Sign sq : signs) {
                    if (p == q && sign_value(sp) < sign_value(sq))
                        continue;  // (-,+) duplicates (+,-) when orders tie
                    out.push_back(make_config(n, p, sp, q, sq));
                }
            }
        }
    }
    return out;
}

}  // namespace sidigraph
