#include "sidigraph/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sidigraph {

namespace {

constexpr double pi = std::numbers::pi;

void require_order(int k) {
    if (k < 2) throw std::invalid_argument("cycle order must be >= 2");
}

double cot(double z) { return std::cos(z) / std::sin(z); }
double csc(double z) { return 1.0 / std::sin(z); }

}  // namespace

double energy_pos_cycle(int k) {
    require_order(k);
    if (k % 2 == 1) return csc(pi / (2.0 * k));
    if (k % 4 == 0) return 2.0 * cot(pi / k);
    if (k == 2) return 2.0;  // 2csc(pi/2), exact
    return 2.0 * csc(pi / k);
}

double energy_neg_cycle(int k) {
    require_order(k);
    if (k % 2 == 1) return csc(pi / (2.0 * k));
    if (k % 4 == 0) return 2.0 * csc(pi / k);
    if (k == 2) return 0.0;  // 2cot(pi/2), exact
    return 2.0 * cot(pi / k);
}

double cycle_energy(const CycleSpec& c) {
    return c.sign == Sign::positive ? energy_pos_cycle(c.order) : energy_neg_cycle(c.order);
}

double energy_config(const BicyclicConfig& c) {
    make_config(c.n, c.first, c.second);  // validate
    return cycle_energy(c.first) + cycle_energy(c.second);
}

bool parity_equalities_hold(int k) {
    require_order(k);
    return energy_pos_cycle(k) == energy_neg_cycle(k);
}

std::string branch_name(const CycleSpec& c) {
    const int k = c.order;
    if (k % 2 == 1) return "csc(pi/2k)";
    const bool swapped = c.sign == Sign::negative;
    if ((k % 4 == 0) != swapped) return "2cot(pi/k)";
    return "2csc(pi/k)";
}

}  // namespace sidigraph
