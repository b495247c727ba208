#ifndef SIDIGRAPH_CLOSED_FORM_HPP
#define SIDIGRAPH_CLOSED_FORM_HPP

#include <string>

#include "sidigraph/graph.hpp"

namespace sidigraph {

// Trigonometric closed forms for cycle energy, split by order mod 4.
//
// positive cycle:  2cot(pi/k)  k = 0 (mod 4)
//                  2csc(pi/k)  k = 2 (mod 4)
//                  csc(pi/2k)  k odd
// negative cycle:  csc/cot swapped on the even branches, odd branch identical.
double energy_pos_cycle(int k);
double energy_neg_cycle(int k);
double cycle_energy(const CycleSpec& c);

// Sum of the two per-cycle closed forms; isolated vertices contribute 0.
double energy_config(const BicyclicConfig& c);

// True iff the positive and negative closed forms coincide exactly at order k
// (they do precisely for odd k).
bool parity_equalities_hold(int k);

// Closed-form branch label for reporting, e.g. "2cot(pi/k)".
std::string branch_name(const CycleSpec& c);

}  // namespace sidigraph

#endif
