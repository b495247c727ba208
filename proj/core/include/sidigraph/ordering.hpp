#ifndef SIDIGRAPH_ORDERING_HPP
#define SIDIGRAPH_ORDERING_HPP

#include <string>
#include <utility>
#include <vector>

#include "sidigraph/graph.hpp"

namespace sidigraph {

enum class Category { even_even, odd_odd, mixed };

const char* category_name(Category c);
Category category_from_name(const std::string& name);  // "even-even" | "odd-odd" | "mixed"

enum class Relation { greater, equal, at_least };

const char* relation_symbol(Relation r);  // ">", "=", ">="

struct ChainLink {
    BicyclicConfig lhs;
    BicyclicConfig rhs;
    Relation relation = Relation::greater;
};

struct OrderingChain {
    std::string chain_id;
    int n = 0;
    std::vector<ChainLink> links;
};

struct LinkResult {
    ChainLink link;
    double lhs_energy = 0.0;
    double rhs_energy = 0.0;
    double margin = 0.0;  // lhs - rhs
    bool pass = false;
};

struct ChainReport {
    std::string chain_id;
    int n = 0;
    std::vector<LinkResult> links;
    int deviations = 0;
    bool all_pass = false;
};

struct RankedConfig {
    BicyclicConfig config;
    double energy = 0.0;
    int rank = 0;  // ties share a rank
};

struct ExtremalResult {
    int n = 0;
    Category category = Category::even_even;
    BicyclicConfig expected_max;
    BicyclicConfig expected_min;
    double expected_max_energy = 0.0;
    double expected_min_energy = 0.0;
    std::vector<BicyclicConfig> max_configs;  // exhaustive argmax set (empty when expectations only)
    std::vector<BicyclicConfig> min_configs;
    double max_energy = 0.0;
    double min_energy = 0.0;
    bool max_match = false;
    bool min_match = false;
};

struct ChainCatalogEntry {
    std::string id;
    Category category;
    bool (*admissible)(int n);
    bool printed_variant;  // materializes a source display known to deviate
};

// Every catalogued ordering chain (per-family monotone chains, dominance
// stars, and the complete-ordering chains for the three cycle-parity
// families).
const std::vector<ChainCatalogEntry>& chain_catalog();

bool chain_admissible(const std::string& chain_id, int n);

// Materialize a catalogued chain at order n.  Throws on unknown id or when
// the chain's residue/parity hypotheses reject n.
OrderingChain expected_chain(const std::string& chain_id, int n);

// A strict link passes when lhs - rhs > tol, an equal link when
// |lhs - rhs| <= tol, an at-least link when lhs - rhs > -tol.
ChainReport verify_chain(const OrderingChain& chain, double tol);

// The predicted extremal configs (no search).
ExtremalResult expected_extremal(int n, Category cat);

// Brute-force search over the whole category; ties listed; match flags
// compare against expected_extremal.
ExtremalResult exhaustive_extremal(int n, Category cat);

// Category members, canonical, with odd-cycle signs canonicalized to
// positive in the odd-odd and mixed categories (odd cycles are
// sign-insensitive for energy).
std::vector<BicyclicConfig> category_configs(int n, Category cat);

// All category configs sorted by energy descending; ties grouped, tie order
// by canonical config order.
std::vector<RankedConfig> full_ranking(int n, Category cat);

}  // namespace sidigraph

#endif
