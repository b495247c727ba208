#ifndef SIDIGRAPH_SPECTRA_HPP
#define SIDIGRAPH_SPECTRA_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sidigraph/graph.hpp"

namespace sidigraph {

using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

// Multiset of eigenvalues, sorted by (argument, modulus) for determinism.
struct Spectrum {
    std::vector<Complex> values;
};

// Monic polynomial with exact integer coefficients, coeffs[i] on x^i.
struct IntPolynomial {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Simultaneous iteration failed to meet the update tolerance within budget.
struct RootFindingError : std::runtime_error {
    RootFindingError(int iters, double residual);
    int iterations;
    double max_residual;
};

// Analytic spectrum of a signed cycle: the order-th roots of its sign.
Spectrum cycle_spectrum(const CycleSpec& c);

// Exact monic characteristic polynomial of the adjacency matrix
// (Faddeev-LeVerrier over arbitrary-precision integers).
IntPolynomial char_poly(const SignedDigraph& g);

// All complex roots with multiplicity.  Exact square-free decomposition
// first, then Durand-Kerner from deterministic perturbed-circle seeds on
// each square-free factor; converged when the largest coordinate update
// drops below tol.  Deterministic given (p, tol).  max_iterations = 0 picks
// a budget from the degree; exhausting it raises RootFindingError.
Spectrum poly_roots(const IntPolynomial& p, double tol, int max_iterations = 0);

// Sum of |Re| / |Im| over the spectrum (compensated summation in
// ascending-argument order).
double energy(const Spectrum& s);
double iota_energy(const Spectrum& s);

// Strong-component decomposition; analytic spectra for cycle components,
// char_poly + poly_roots for anything else; energies summed.
double energy_of_sidigraph(const SignedDigraph& g, double tol = 1e-12);

// Helpers shared with tests and reports.
double spectral_energy_of_matrix(const SignedDigraph& g, double tol);  // no decomposition
bool conjugate_closed(const Spectrum& s, double tol);

}  // namespace sidigraph

#endif
