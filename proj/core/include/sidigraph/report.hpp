#ifndef SIDIGRAPH_REPORT_HPP
#define SIDIGRAPH_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "sidigraph/ordering.hpp"

namespace sidigraph {

using Json = nlohmann::ordered_json;

inline constexpr const char* project_version = "0.1.0";

// One fenced deviation: a link of a catalogued chain (or a proof-bound check)
// that does not hold numerically as printed in the source ordering, traced to
// a known display defect.
struct AuditedDeviation {
    std::string kind;      // "chain-link" | "proof-bound"
    std::string chain_id;  // or the bound id for proof bounds
    int n = 0;
    std::string lhs, rhs;  // config strings, empty for proof bounds
    std::string claimed;   // relation symbol
    double margin = 0.0;
    std::string reason;
};

class AuditedLedger {
  public:
    static AuditedLedger embedded();  // compiled from data/audited_deviations.json
    static AuditedLedger from_json_text(const std::string& text);
    static AuditedLedger from_file(const std::string& path);

    bool covers_chain_link(const std::string& chain_id, int n, const std::string& lhs,
                           const std::string& rhs, const std::string& claimed) const;
    bool covers_proof_bound(const std::string& bound, int n) const;
    const std::vector<AuditedDeviation>& entries() const { return entries_; }

  private:
    std::vector<AuditedDeviation> entries_;
};

struct VerifyOptions {
    int lo = 6;
    int hi = 40;
    double tolerance = 1e-9;
};

struct VerifyOutcome {
    Json report;
    int deviations = 0;   // checks that did not hold
    int unexplained = 0;  // deviations not fenced by the ledger
};

// Runs oracle-vs-closed-form equivalence, every admissible catalogued chain,
// extremal matching and the analysis checks over [lo, hi]; deviations are
// matched against the ledger.  Throws std::invalid_argument on an empty range.
VerifyOutcome run_verify(const VerifyOptions& opts, const AuditedLedger& ledger);

// Re-derives the ledger from the verifier's own output: all deviations over
// chains for n in [chain_lo, chain_hi] and proof bounds up to bounds_hi,
// tagged with their defect class.
Json build_audited_ledger_json(int chain_lo, int chain_hi, int bounds_hi, double tolerance);

// ---- table / chain / extremal emission ----

std::string table_csv(int n, Category cat);
Json table_json(int n, Category cat);
std::string table_latex(int n, Category cat);

Json chain_report_json(const ChainReport& rep, const AuditedLedger& ledger);
std::string chain_csv(const ChainReport& rep);
std::string chain_latex(const OrderingChain& chain);

Json extremal_json(const ExtremalResult& r);
std::string extremal_text(const ExtremalResult& r);

std::string format_energy(double e);  // fixed 12 decimal places

}  // namespace sidigraph

#endif
