#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sidigraph/report.hpp"

namespace {

using namespace sidigraph;

constexpr int exit_ok = 0;
constexpr int exit_deviations = 1;
constexpr int exit_failure = 2;

double default_tolerance() {
    if (const char* env = std::getenv("SIDIGRAPH_TOL")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("SIDIGRAPH_TOL", "not a number");
        }
    }
    return 1e-9;
}

void check_tolerance(double tol) {
    if (!(tol > 0.0 && tol <= 1e-6))
        throw CLI::ValidationError("--tolerance", "must be in (0, 1e-6]");
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos)
        throw std::invalid_argument("range must look like 6..40");
    return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2))};
}

// --out is resolved against SIDIGRAPH_OUT when relative; empty means stdout
void write_output(const std::string& out, const std::string& content) {
    if (out.empty()) {
        std::cout << content;
        return;
    }
    std::filesystem::path path(out);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("SIDIGRAPH_OUT")) path = std::filesystem::path(dir) / path;
    }
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << content;
}

AuditedLedger load_ledger(const std::string& path) {
    return path.empty() ? AuditedLedger::embedded() : AuditedLedger::from_file(path);
}

int cmd_table(int n, const std::string& category, const std::string& format,
              const std::string& out, double tol) {
    check_tolerance(tol);
    if (n <= 5) throw std::invalid_argument("table requires n > 5");
    const Category cat = category_from_name(category);
    if (format == "csv")
        write_output(out, table_csv(n, cat));
    else if (format == "json")
        write_output(out, table_json(n, cat).dump(2) + "\n");
    else if (format == "latex")
        write_output(out, table_latex(n, cat));
    else
        throw std::invalid_argument("unknown format: " + format);
    return exit_ok;
}

int cmd_extremal(int n, const std::string& category, const std::string& format,
                 const std::string& out) {
    if (n <= 5) throw std::invalid_argument("extremal requires n > 5");
    const ExtremalResult r = exhaustive_extremal(n, category_from_name(category));
    if (format == "json")
        write_output(out, extremal_json(r).dump(2) + "\n");
    else
        write_output(out, extremal_text(r));
    return r.max_match && r.min_match ? exit_ok : exit_deviations;
}

int cmd_chain(const std::string& chain_id, int n, const std::string& format,
              const std::string& out, double tol, const std::string& ledger_path) {
    check_tolerance(tol);
    const OrderingChain chain = expected_chain(chain_id, n);
    const ChainReport rep = verify_chain(chain, tol);
    if (format == "latex") {
        write_output(out, chain_latex(chain));
    } else if (format == "csv") {
        write_output(out, chain_csv(rep));
    } else {
        const Json j = chain_report_json(rep, load_ledger(ledger_path));
        write_output(out, j.dump(2) + "\n");
        return j["unexplained"].get<int>() == 0 ? exit_ok : exit_deviations;
    }
    return exit_ok;
}

int cmd_verify(const std::string& range, double tol, const std::string& out,
               const std::string& ledger_path, const std::string& emit_ledger) {
    check_tolerance(tol);
    const auto [lo, hi] = parse_range(range);
    if (hi < lo) throw std::invalid_argument("empty n-range " + range);
    if (!emit_ledger.empty()) {
        const Json ledger = build_audited_ledger_json(lo, hi, 200, tol);
        write_output(emit_ledger, ledger.dump(1) + "\n");
        std::cerr << "wrote " << ledger.size() << " audited deviations to " << emit_ledger
                  << "\n";
        return exit_ok;
    }
    const VerifyOutcome outcome = run_verify(VerifyOptions{lo, hi, tol}, load_ledger(ledger_path));
    write_output(out, outcome.report.dump(2) + "\n");
    std::cerr << "deviations: " << outcome.deviations << " (unexplained " << outcome.unexplained
              << ")\n";
    return outcome.unexplained == 0 ? exit_ok : exit_deviations;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"energy orderings of vertex-disjoint bicyclic signed digraphs"};
    app.set_version_flag("--version", std::string(sidigraph::project_version));
    app.require_subcommand(1);

    std::string category = "even-even", out, ledger_path, chain_id, range;
    std::string table_format = "csv", extremal_format = "text", chain_format = "json";
    std::string emit_ledger;
    int n = 0;
    double tol;
    try {
        tol = default_tolerance();
    } catch (const CLI::Error& e) {
        return app.exit(e);
    }

    auto* table = app.add_subcommand("table", "full energy ranking for one order");
    table->add_option("--n", n, "total order")->required();
    table->add_option("--category", category, "even-even | odd-odd | mixed");
    table->add_option("--tolerance", tol, "comparison tolerance");
    table->add_option("--format", table_format, "csv | json | latex");
    table->add_option("--out", out, "output file (default stdout)");

    auto* extremal = app.add_subcommand("extremal", "expected vs exhaustive extremal configs");
    extremal->add_option("--n", n, "total order")->required();
    extremal->add_option("--category", category, "even-even | odd-odd | mixed");
    extremal->add_option("--format", extremal_format, "text | json");
    extremal->add_option("--out", out, "output file (default stdout)");

    auto* chain = app.add_subcommand("chain", "materialize and check a catalogued chain");
    chain->add_option("--chain-id", chain_id, "catalogued chain id")->required();
    chain->add_option("--n", n, "total order")->required();
    chain->add_option("--tolerance", tol, "comparison tolerance");
    chain->add_option("--format", chain_format, "json | csv | latex");
    chain->add_option("--out", out, "output file (default stdout)");
    chain->add_option("--ledger", ledger_path, "audited-deviation ledger (default: embedded)");

    auto* verify = app.add_subcommand("verify", "run all checks over an n-range");
    verify->add_option("--n-range", range, "inclusive range, e.g. 6..40")->required();
    verify->add_option("--tolerance", tol, "comparison tolerance");
    verify->add_option("--out", out, "report file (default stdout)");
    verify->add_option("--ledger", ledger_path, "audited-deviation ledger (default: embedded)");
    verify->add_option("--emit-ledger", emit_ledger,
                       "regenerate the audited-deviation ledger to this path");

    auto* chains = app.add_subcommand("chains", "list catalogued chain ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (table->parsed()) return cmd_table(n, category, table_format, out, tol);
        if (extremal->parsed()) return cmd_extremal(n, category, extremal_format, out);
        if (chain->parsed()) return cmd_chain(chain_id, n, chain_format, out, tol, ledger_path);
        if (verify->parsed()) return cmd_verify(range, tol, out, ledger_path, emit_ledger);
        if (chains->parsed()) {
            for (const auto& entry : sidigraph::chain_catalog())
                std::cout << entry.id << " (" << sidigraph::category_name(entry.category) << ")\n";
            return exit_ok;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_failure;
}
