#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "sidigraph/report.hpp"

using namespace sidigraph;

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

CommandResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd =
        env_prefix + std::string(SIDIGRAPH_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    CommandResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

// minimal structural validation against the shipped schema subset:
// type / properties / required / items
bool validates(const Json& schema, const Json& value);

bool type_matches(const std::string& t, const Json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "number") return v.is_number();
    if (t == "integer") return v.is_number_integer();
    if (t == "boolean") return v.is_boolean();
    return false;
}

bool validates(const Json& schema, const Json& value) {
    if (schema.contains("type") && !type_matches(schema["type"].get<std::string>(), value))
        return false;
    if (schema.contains("required"))
        for (const Json& key : schema["required"])
            if (!value.contains(key.get<std::string>())) return false;
    if (schema.contains("properties") && value.is_object())
        for (const auto& [key, sub] : schema["properties"].items())
            if (value.contains(key) && !validates(sub, value[key])) return false;
    if (schema.contains("items") && value.is_array())
        for (const Json& item : value)
            if (!validates(schema["items"], item)) return false;
    return true;
}

}  // namespace

TEST_CASE("energy formatting uses twelve decimal places") {
    CHECK(format_energy(6.0) == "6.000000000000");
    CHECK(format_energy(2.0 + 2.0 * std::sqrt(2.0)) == "4.828427124746");
}

TEST_CASE("the embedded ledger only contains the four known defect classes") {
    const AuditedLedger ledger = AuditedLedger::embedded();
    CHECK(!ledger.entries().empty());
    for (const AuditedDeviation& d : ledger.entries()) {
        const bool known = d.reason == "tie-csc2-cot4" || d.reason == "dominance-range" ||
                           d.reason == "printed-direction" || d.reason == "constant-rounding";
        INFO(d.kind << " " << d.chain_id << " n=" << d.n << " reason=" << d.reason);
        CHECK(known);
    }
}

TEST_CASE("run_verify produces a clean report over a small range") {
    const VerifyOutcome out = run_verify(VerifyOptions{6, 12, 1e-9}, AuditedLedger::embedded());
    CHECK(out.unexplained == 0);
    CHECK(out.report["summary"]["clean"].get<bool>());
    CHECK(out.report["meta"]["version"].get<std::string>() == project_version);
    CHECK(!out.report["chains"].empty());
    CHECK(!out.report["extremal"].empty());
}

TEST_CASE("run_verify rejects an empty range") {
    CHECK_THROWS_AS(run_verify(VerifyOptions{40, 6, 1e-9}, AuditedLedger::embedded()),
                    std::invalid_argument);
}

TEST_CASE("verify reports validate against the shipped schema") {
    std::ifstream in(std::string(SIDIGRAPH_SOURCE_DIR) + "/data/report_schema.json");
    REQUIRE(in.good());
    Json schema;
    in >> schema;
    const VerifyOutcome out = run_verify(VerifyOptions{6, 10, 1e-9}, AuditedLedger::embedded());
    CHECK(validates(schema, out.report));
}

TEST_CASE("table csv lists the n=8 maximizer first") {
    const std::string csv = table_csv(8, Category::even_even);
    std::istringstream lines(csv);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(header == "rank,p,sign_p,q,sign_q,energy,branch_p,branch_q");
    CHECK(first == "1,2,+,6,+,6.000000000000,2csc(pi/k),2csc(pi/k)");
}

TEST_CASE("table json carries one entry per category member") {
    const Json j = table_json(6, Category::odd_odd);
    CHECK(j["ranking"].size() == 1);
    CHECK(j["ranking"][0]["config"].get<std::string>() == "[3+,3+]");
}

TEST_CASE("chain latex renders bold negative orders") {
    const OrderingChain chain = expected_chain("even-negneg", 10);
    const std::string tex = chain_latex(chain);
    CHECK(tex.find("\\mathbf{4}") != std::string::npos);
    CHECK(tex.find("D_{10}^s") != std::string::npos);
}

TEST_CASE("cli: table rejects n = 5") {
    CHECK(run_cli("table --n 5 --category even-even").exit_code == 2);
}

TEST_CASE("cli: verify exit codes") {
    CHECK(run_cli("verify --n-range 40..6 --out /dev/null").exit_code == 2);
    CHECK(run_cli("verify --n-range 6..8 --out /dev/null").exit_code == 0);
    CHECK(run_cli("verify --n-range 6..6 --out /dev/null").exit_code == 0);  // minimal report
}

TEST_CASE("cli: repeated verify runs are byte-identical") {
    const CommandResult a = run_cli("verify --n-range 6..12");
    const CommandResult b = run_cli("verify --n-range 6..12");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());
}

TEST_CASE("cli: extremal summary prints match flags") {
    const CommandResult r = run_cli("extremal --n 8 --category even-even");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[2+,6+]") != std::string::npos);
    CHECK(r.output.find("MATCH") != std::string::npos);
    CHECK(r.output.find("MISMATCH") == std::string::npos);
}

TEST_CASE("cli: tolerance env var is honored but the flag wins") {
    // out-of-range env tolerance rejected when it is the effective value
    CHECK(run_cli("verify --n-range 6..8 --out /dev/null", "SIDIGRAPH_TOL=1e-3 ").exit_code != 0);
    // the flag overrides the broken env value
    CHECK(run_cli("verify --n-range 6..8 --tolerance 1e-9 --out /dev/null",
                  "SIDIGRAPH_TOL=1e-3 ")
              .exit_code == 0);
}

TEST_CASE("cli: SIDIGRAPH_OUT prefixes relative output paths") {
    const std::string dir = "/tmp/sidigraph_test_out";
    std::remove((dir + "/t.csv").c_str());
    const CommandResult r = run_cli("table --n 8 --category even-even --out t.csv",
                                    "SIDIGRAPH_OUT=" + dir + " ");
    CHECK(r.exit_code == 0);
    std::ifstream f(dir + "/t.csv");
    CHECK(f.good());
}

TEST_CASE("cli: chain subcommand materializes a named chain") {
    const CommandResult r = run_cli("chain --chain-id odd-adjacent --n 12 --format json");
    CHECK(r.exit_code == 0);
    const Json j = Json::parse(r.output);
    CHECK(j["chain_id"].get<std::string>() == "odd-adjacent");
    CHECK(j["verdict"].get<std::string>() == "consistent");
}
