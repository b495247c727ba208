#include "sidigraph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sidigraph {

namespace {

constexpr double pi = std::numbers::pi;

using Rational = boost::multiprecision::cpp_rational;
using RatPoly = std::vector<Rational>;  // coeffs[i] on x^i, normalized (no trailing zeros)

void sort_spectrum(std::vector<Complex>& v) {
    std::sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) {
        const double aa = std::arg(a), ab = std::arg(b);
        if (aa != ab) return aa < ab;
        return std::abs(a) < std::abs(b);
    });
}

double kahan_sum_abs(const std::vector<Complex>& v, double (*part)(const Complex&)) {
    double sum = 0.0, carry = 0.0;
    for (const Complex& z : v) {
        const double term = std::abs(part(z)) - carry;
        const double next = sum + term;
        carry = (next - sum) - term;
        sum = next;
    }
    return sum;
}

// ---- exact rational polynomial helpers (square-free decomposition) ----

void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int rp_degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly rp_derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
    rp_trim(d);
    return d;
}

void rp_make_monic(RatPoly& p) {
    rp_trim(p);
    if (p.empty()) return;
    const Rational lead = p.back();
    for (Rational& c : p) c /= lead;
}

// division with remainder; both exact
std::pair<RatPoly, RatPoly> rp_divmod(RatPoly a, const RatPoly& b) {
    RatPoly q(a.size(), Rational(0));
    while (rp_degree(a) >= rp_degree(b) && !a.empty()) {
        const int shift = rp_degree(a) - rp_degree(b);
        const Rational factor = a.back() / b.back();
        q[shift] += factor;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
        rp_trim(a);
    }
    rp_trim(q);
    return {q, a};
}

RatPoly rp_gcd(RatPoly a, RatPoly b) {
    rp_trim(a);
    rp_trim(b);
    while (!b.empty()) {
        RatPoly r = rp_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
        rp_make_monic(b);
    }
    rp_make_monic(a);
    return a;
}

// Yun's algorithm: p = prod f_i^i with the f_i square-free and coprime.
std::vector<std::pair<RatPoly, int>> square_free_decomposition(RatPoly p) {
    rp_make_monic(p);
    std::vector<std::pair<RatPoly, int>> out;
    if (rp_degree(p) < 1) return out;
    RatPoly dp = rp_derivative(p);
    RatPoly g = rp_gcd(p, dp);
    if (rp_degree(g) == 0) {
        out.emplace_back(std::move(p), 1);
        return out;
    }
    RatPoly c = rp_divmod(p, g).first;
    RatPoly d = rp_divmod(dp, g).first;
    RatPoly cd = rp_derivative(c);
    d.resize(std::max(d.size(), cd.size()), Rational(0));
    for (std::size_t i = 0; i < cd.size(); ++i) d[i] -= cd[i];
    rp_trim(d);
    int mult = 1;
    while (rp_degree(c) > 0) {
        RatPoly f = rp_gcd(c, d);
        if (rp_degree(f) > 0) out.emplace_back(f, mult);
        c = rp_divmod(c, f).first;
        RatPoly cd = rp_derivative(c);
        RatPoly nd = rp_divmod(d, f).first;
        nd.resize(std::max(nd.size(), cd.size()), Rational(0));
        for (std::size_t i = 0; i < cd.size(); ++i) nd[i] -= cd[i];
        rp_trim(nd);
        d = std::move(nd);
        ++mult;
    }
    return out;
}

// ---- Durand-Kerner on a square-free factor ----

Complex eval_poly(const std::vector<double>& c, Complex z) {
    Complex acc(0.0, 0.0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

std::vector<Complex> durand_kerner(const std::vector<double>& monic, double tol, int max_iters,
                                   int* iters_out, double* residual_out) {
    const int d = static_cast<int>(monic.size()) - 1;
    std::vector<Complex> z(d);
    double max_abs = 0.0;
    for (int i = 0; i < d; ++i) max_abs = std::max(max_abs, std::abs(monic[i]));
    double radius = std::pow(std::max(std::abs(monic[0]), 1e-8), 1.0 / d);
    radius = std::clamp(radius, 0.25, 1.0 + max_abs);
    for (int j = 0; j < d; ++j) {
        const double theta = 2.0 * pi * j / d + 0.7 / d + 0.3;
        z[j] = radius * Complex(std::cos(theta), std::sin(theta));
    }
    int it = 0;
    for (; it < max_iters; ++it) {
        double max_update = 0.0;
        for (int i = 0; i < d; ++i) {
            Complex denom(1.0, 0.0);
            for (int j = 0; j < d; ++j)
                if (j != i) denom *= z[i] - z[j];
            const Complex w = eval_poly(monic, z[i]) / denom;
            z[i] -= w;
            max_update = std::max(max_update, std::abs(w) / std::max(1.0, std::abs(z[i])));
        }
        if (max_update < tol) break;
    }
    double residual = 0.0;
    for (int i = 0; i < d; ++i) residual = std::max(residual, std::abs(eval_poly(monic, z[i])));
    if (iters_out) *iters_out = it;
    if (residual_out) *residual_out = residual;
    if (it >= max_iters) throw RootFindingError(it, residual);
    return z;
}

SignedDigraph validate(const SignedDigraph& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count) * g.vertex_count, 0);
    for (const Arc& a : g.arcs) {
        if (a.from < 0 || a.from >= g.vertex_count || a.to < 0 || a.to >= g.vertex_count)
            throw std::invalid_argument("arc endpoint out of range");
        char& slot = seen[static_cast<std::size_t>(a.from) * g.vertex_count + a.to];
        if (slot) throw std::invalid_argument("duplicate arc");
        slot = 1;
    }
    return g;
}

// component is a single directed cycle iff every vertex has exactly one
// in-arc and one out-arc inside it
bool component_cycle_spec(const SignedDigraph& g, const std::vector<int>& comp, CycleSpec* out) {
    if (comp.size() < 2) return false;
    std::vector<int> outdeg(comp.size(), 0), indeg(comp.size(), 0);
    std::vector<int> local(g.vertex_count, -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    int sign_product = 1;
    for (const Arc& a : g.arcs) {
        if (local[a.from] < 0 || local[a.to] < 0) continue;
        ++outdeg[local[a.from]];
        ++indeg[local[a.to]];
        sign_product *= sign_value(a.sign);
    }
    for (std::size_t i = 0; i < comp.size(); ++i)
        if (outdeg[i] != 1 || indeg[i] != 1) return false;
    // strongly connected with all degrees one => a single cycle
    *out = CycleSpec{static_cast<int>(comp.size()),
                     sign_product > 0 ? Sign::positive : Sign::negative};
    return true;
}

SignedDigraph induced_subgraph(const SignedDigraph& g, const std::vector<int>& comp) {
    std::vector<int> local(g.vertex_count, -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    SignedDigraph sub;
    sub.vertex_count = static_cast<int>(comp.size());
    for (const Arc& a : g.arcs)
        if (local[a.from] >= 0 && local[a.to] >= 0)
            sub.arcs.push_back(Arc{local[a.from], local[a.to], a.sign});
    return sub;
}

}  // namespace

RootFindingError::RootFindingError(int iters, double residual)
    : std::runtime_error("root finder did not converge after " + std::to_string(iters) +
                         " iterations (max residual " + std::to_string(residual) + ")"),
      iterations(iters),
      max_residual(residual) {}

Spectrum cycle_spectrum(const CycleSpec& c) {
    if (c.order < 2) throw std::invalid_argument("cycle order must be >= 2");
    std::vector<Complex> v;
    v.reserve(c.order);
    for (int j = 0; j < c.order; ++j) {
        const double theta = c.sign == Sign::positive ? 2.0 * pi * j / c.order
                                                      : pi * (2.0 * j + 1.0) / c.order;
        v.emplace_back(std::cos(theta), std::sin(theta));
    }
    sort_spectrum(v);
    return Spectrum{std::move(v)};
}

IntPolynomial char_poly(const SignedDigraph& g) {
    validate(g);
    const int n = g.vertex_count;
    if (n < 1) throw std::invalid_argument("vertex_count must be >= 1");
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, 0));
    for (const Arc& arc : g.arcs) a[arc.from][arc.to] += sign_value(arc.sign);

    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
    // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k) / k.
    std::vector<BigInt> coeffs(n + 1, 0);
    coeffs[n] = 1;
    std::vector<std::vector<BigInt>> m = a;
    BigInt trace = 0;
    for (int i = 0; i < n; ++i) trace += m[i][i];
    coeffs[n - 1] = -trace;
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i) m[i][i] += coeffs[n - k + 1];
        std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                const BigInt& f = a[i][l];
                for (int j = 0; j < n; ++j) next[i][j] += f * m[l][j];
            }
        m = std::move(next);
        trace = 0;
        for (int i = 0; i < n; ++i) trace += m[i][i];
        coeffs[n - k] = -trace / k;  // exact by construction
    }
    return IntPolynomial{std::move(coeffs)};
}

Spectrum poly_roots(const IntPolynomial& p, double tol, int max_iterations) {
    if (p.degree() < 1) throw std::invalid_argument("polynomial degree must be >= 1");
    if (!(tol > 0.0 && tol <= 1e-6)) throw std::invalid_argument("tol must be in (0, 1e-6]");
    if (p.coeffs.back() != 1) throw std::invalid_argument("polynomial must be monic");

    RatPoly rp(p.coeffs.size());
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) rp[i] = Rational(p.coeffs[i]);

    std::vector<Complex> roots;
    for (auto& [factor, mult] : square_free_decomposition(std::move(rp))) {
        const int d = rp_degree(factor);
        std::vector<double> monic(d + 1);
        for (int i = 0; i <= d; ++i) monic[i] = factor[i].convert_to<double>();
        std::vector<Complex> part;
        if (d == 1) {
            part.push_back(Complex(-monic[0], 0.0));
        } else {
            const int budget = max_iterations > 0 ? max_iterations : 200 + 20 * d;
            part = durand_kerner(monic, tol, budget, nullptr, nullptr);
        }
        for (const Complex& r : part)
            for (int c = 0; c < mult; ++c) roots.push_back(r);
    }
    sort_spectrum(roots);
    return Spectrum{std::move(roots)};
}

double energy(const Spectrum& s) {
    return kahan_sum_abs(s.values, +[](const Complex& z) { return z.real(); });
}

double iota_energy(const Spectrum& s) {
    return kahan_sum_abs(s.values, +[](const Complex& z) { return z.imag(); });
}

double energy_of_sidigraph(const SignedDigraph& g, double tol) {
    validate(g);
    double total = 0.0;
    for (const auto& comp : strong_components(g).components) {
        if (comp.size() == 1) {
            // single vertex: eigenvalue 0, or the loop sign if one exists
            for (const Arc& a : g.arcs)
                if (a.from == comp[0] && a.to == comp[0]) total += 1.0;
            continue;
        }
        CycleSpec spec;
        if (component_cycle_spec(g, comp, &spec)) {
            total += energy(cycle_spectrum(spec));
        } else {
            total += energy(poly_roots(char_poly(induced_subgraph(g, comp)), tol));
        }
    }
    return total;
}

double spectral_energy_of_matrix(const SignedDigraph& g, double tol) {
    return energy(poly_roots(char_poly(g), tol));
}

bool conjugate_closed(const Spectrum& s, double tol) {
    std::vector<char> used(s.values.size(), 0);
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        const Complex want = std::conj(s.values[i]);
        bool found = false;
        for (std::size_t j = 0; j < s.values.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(s.values[j] - want) <= tol) {
                used[j] = 1;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace sidigraph
