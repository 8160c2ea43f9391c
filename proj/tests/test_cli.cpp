#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dihedra/engine.hpp"

using namespace dihedra;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(DIHEDRA_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

std::string data(const std::string& name) { return std::string(DIHEDRA_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("schema parsing round trip") {
    AlgebraDescription d = parse_description_file(data("dual_numbers.json"));
    CHECK(d.space.dim() == 2);
    CHECK(d.involutive);
    CHECK(d.cyclic);
    CHECK(d.truncation == 4);
    AInftyStructure s = d.structure();
    CHECK(check_square_zero(s).ok);
    CHECK(check_cyclic(s).ok);
}

TEST_CASE("schema errors carry context") {
    CHECK_THROWS_WITH_AS(parse_description_text("{\"basis\": []}"),
                         doctest::Contains("structure"), std::invalid_argument);
    CHECK_THROWS_AS(parse_description_text("not json"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_description_text(R"({"basis":[{"name":"a","degree":0}],
            "structure":{"mode":"dual","components":[
              {"generator":"zzz","word":["a"],"coeff":1}]}})"),
        doctest::Contains("zzz"), std::invalid_argument);
}

TEST_CASE("hat input mode agrees with the dga import") {
    std::string hat = R"({
      "basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": 0}],
      "structure": {"mode": "hat", "operations": [
        {"args": ["1", "1"], "result": [{"basis": "1", "coeff": 1}]},
        {"args": ["1", "x"], "result": [{"basis": "x", "coeff": 1}]},
        {"args": ["x", "1"], "result": [{"basis": "x", "coeff": 1}]}
      ]},
      "truncation": 4
    })";
    AlgebraDescription hd = parse_description_text(hat);
    AlgebraDescription dd = parse_description_file(data("dual_numbers.json"));
    AInftyStructure hs = hd.structure();
    AInftyStructure ds = dd.structure();
    for (std::size_t n = 0; n <= 4; ++n) CHECK(hs.m.comp[n] == ds.m.comp[n]);
}

TEST_CASE("validate command") {
    CliResult ok = run_cli("validate " + data("dual_numbers.json"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("OK") != std::string::npos);

    CliResult bad = run_cli("validate " + data("broken_involution.json"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(bad.out.find("weight 1") != std::string::npos);  // witness weight

    CliResult empty = run_cli("validate " + data("empty_basis.json"));
    CHECK(empty.exit_code == 0);
}

TEST_CASE("validate echoes the derived dual components") {
    CliResult r = run_cli("--format json validate " + data("ground_field.json"));
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["structure_mode"] == "dga");
    REQUIRE(j["components"].size() == 1);
    CHECK(j["components"][0]["weight"] == 2);
    CHECK(j["components"][0]["coeff"] == "-1");
}

TEST_CASE("cohomology command") {
    CliResult hc = run_cli("--format json cohomology " + data("ground_field.json") +
                           " --which hc");
    REQUIRE(hc.exit_code == 0);
    auto j = nlohmann::json::parse(hc.out);
    std::vector<std::size_t> dims;
    for (const auto& row : j["table"]) dims.push_back(row["h_dim"].get<std::size_t>());
    CHECK(dims == std::vector<std::size_t>{1, 0, 1, 0, 1});

    CliResult dec = run_cli("cohomology " + data("dual_numbers.json") + " --which hh --decompose");
    CHECK(dec.exit_code == 0);
    CHECK(dec.out.find("additivity: OK") != std::string::npos);

    CliResult single = run_cli("--format json cohomology " + data("dual_numbers.json") +
                               " --which hh --degrees 2..2");
    REQUIRE(single.exit_code == 0);
    auto js = nlohmann::json::parse(single.out);
    CHECK(js["table"].size() == 1);

    CliResult mismatch = run_cli("cohomology " + data("ground_field.json") + " --which nope");
    CHECK(mismatch.exit_code == 2);
}

TEST_CASE("deform command") {
    CliResult moduli = run_cli("--format json deform " + data("ground_field.json") +
                               " moduli --flavor inv");
    REQUIRE(moduli.exit_code == 0);
    auto j = nlohmann::json::parse(moduli.out);
    CHECK(j["match"] == "MATCH");

    // eta = 0 is Maurer-Cartan (the file has no deformation data)
    CliResult mc0 = run_cli("deform " + data("ground_field.json") + " mc-check --flavor plain");
    CHECK(mc0.exit_code == 0);

    // zero-line file: eta = eps * (e -> e.e) with m = 0 is MC, and the
    // gauge by y keeps it MC
    CliResult mc = run_cli("deform " + data("zero_line.json") + " mc-check --flavor inv");
    CHECK(mc.exit_code == 0);
    CliResult gauge = run_cli("--format json deform " + data("zero_line.json") +
                              " gauge --flavor inv");
    REQUIRE(gauge.exit_code == 0);
    auto gj = nlohmann::json::parse(gauge.out);
    CHECK(gj["mc_preserved"] == true);

    // "dim = 1, HH2+(>=1) = 1, MATCH" for the one-line zero structure
    CliResult zmod = run_cli("--format json deform " + data("zero_line.json") +
                             " moduli --flavor inv");
    REQUIRE(zmod.exit_code == 0);
    auto zj = nlohmann::json::parse(zmod.out);
    CHECK(zj["dim"] == 1);
    CHECK(zj["h2"] == 1);
    CHECK(zj["match"] == "MATCH");
}

TEST_CASE("iso-check command") {
    CliResult ok = run_cli("iso-check " + data("ground_field.json"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("chain map: OK") != std::string::npos);

    CliResult dual = run_cli("--format json iso-check " + data("dual_numbers.json"));
    REQUIRE(dual.exit_code == 0);
    auto j = nlohmann::json::parse(dual.out);
    for (const auto& row : j["weights"]) {
        CHECK(row["bijective"] == true);
        CHECK(row["pm_match"] == true);
    }

    CliResult degen = run_cli("iso-check " + data("degenerate_form.json"));
    CHECK(degen.exit_code == 2);
    CHECK(degen.out.find("radical") != std::string::npos);
    CHECK(degen.out.find("x") != std::string::npos);  // names the radical vector
}

TEST_CASE("reports are byte-identical across runs") {
    for (std::string cmd :
         {std::string("--format json validate ") + data("dual_numbers.json"),
          std::string("--format json cohomology ") + data("ground_field.json") + " --which hd+",
          std::string("--format json deform ") + data("zero_line.json") + " moduli --flavor inv",
          std::string("--format json iso-check ") + data("ground_field.json")}) {
        CliResult a = run_cli(cmd);
        CliResult b = run_cli(cmd);
        CHECK(a.out == b.out);
        CHECK(a.exit_code == b.exit_code);
    }
}

TEST_CASE("prime field mode runs through the engine") {
    std::string doc = R"({
      "field": "F_7",
      "basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": 0}],
      "structure": {"mode": "dga", "multiplication": [
        {"left": "1", "right": "1", "result": [{"basis": "1", "coeff": 1}]},
        {"left": "1", "right": "x", "result": [{"basis": "x", "coeff": 1}]},
        {"left": "x", "right": "1", "result": [{"basis": "x", "coeff": 1}]}
      ], "differential": []},
      "truncation": 3, "degrees": [0, 2]
    })";
    AlgebraDescription d = parse_description_text(doc);
    RunResult v = run_validate(d);
    CHECK(v.ok);
    RunResult c = run_cohomology(d, "hh", {});
    CHECK(c.report["table"][0]["h_dim"] == 2);
    CHECK(c.report["table"][1]["h_dim"] == 1);
}
