// End-to-end checks of the installed command-line tool.  The binary path
// arrives in DOMPOLY_BIN; commands run through popen so both the output and
// the exit status can be asserted.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

std::string binary()
{
    const char* bin = std::getenv("DOMPOLY_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "DOMPOLY_BIN must point at the CLI binary");
    return bin;
}

RunResult run(const std::string& args, bool merge_stderr = false)
{
    std::string cmd = "'" + binary() + "' " + args
        + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
        out.append(buf, got);
    int status = pclose(pipe);
    return { WEXITSTATUS(status), out };
}

} // namespace

TEST_CASE("poly renders the documented plain format")
{
    RunResult r = run("poly --family path --n 3 --convention gamma --format plain");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 + 3t + t^2\n");

    CHECK(run("poly --family cycle --n 3 --convention gamma").output == "1 + 3t + 3t^2\n");
    CHECK(run("poly --family path --n 2 --convention gamma").output == "1 + 2t\n");
    CHECK(run("poly --family path --n 3 --convention D").output == "t + 3t^2 + t^3\n");
}

TEST_CASE("the three methods agree")
{
    std::string formula = run("poly --family wheel --n 4 --method formula").output;
    CHECK(formula == run("poly --family wheel --n 4 --method oracle").output);
    CHECK(formula == run("poly --family wheel --n 4 --method engine").output);
}

TEST_CASE("edge files feed the engine")
{
    std::string path = "cli_checks_single_vertex.txt";
    std::ofstream(path) << "1\n";
    RunResult r = run("poly --edges " + path + " --method engine");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n");

    std::ofstream(path) << "4\n1 2\n2 3\n3 4\n";
    CHECK(run("poly --edges " + path).output
          == run("poly --family path --n 4").output);
    std::remove(path.c_str());
}

TEST_CASE("poly json output")
{
    RunResult r = run("poly --family path --n 3 --format json --convention gamma");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["n"] == 3);
    CHECK(j["convention"] == "gamma");
    CHECK(j["coeffs"] == nlohmann::json::array({ "1", "3", "1", "0" }));
}

TEST_CASE("tables")
{
    RunResult r = run("table --family path --max-n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n2,1\n1,3,1\n");

    CHECK(run("table --family cycle --max-n 3").output == "1\n2,1\n3,3,1\n");
    CHECK(run("table --family wheel --max-n 4").output == "4,6,4,1\n");
    CHECK(run("table --family path --max-n 5 --source oracle").output
          == run("table --family path --max-n 5 --source formula").output);
}

TEST_CASE("sequence listings")
{
    CHECK(run("oeis tribonacci --count 6").output == "1 1 2 4 7 13\n");
    CHECK(run("oeis paths-triangle --count-rows 3 --order rows").output == "1 2 1 1 3 1\n");
    CHECK(run("oeis cycles-triangle --count-rows 3 --order rows").output == "1 2 1 3 3 1\n");
    CHECK(run("oeis wheels-triangle --count-rows 1 --order rows").output == "4 6 4 1\n");
    // antidiagonals group entries by n + k, ascending n inside a group
    CHECK(run("oeis paths-triangle --count-rows 4 --order antidiagonals").output
          == "1 2 1 1 3 0 1 4 4 1\n");
    RunResult bad = run("oeis no-such-tag");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("exit codes")
{
    CHECK(run("poly --family path --n 3 --no-such-flag", true).exit_code == 2);
    CHECK(run("poly --family dodecahedron --n 3", true).exit_code == 2);
    CHECK(run("poly", true).exit_code == 2); // neither --family nor --edges
    CHECK(run("poly --family wheel --n 3", true).exit_code == 2);
    CHECK(run("table --family complete --max-n 3", true).exit_code == 2);
    CHECK(run("table --family wheel --max-n 3", true).exit_code == 2);
    CHECK(run("poly --family path --n 26 --method oracle --cap 24", true).exit_code == 3);
    CHECK(run("poly --family path --n 26 --method oracle --cap 99", true).exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("the formula method needs a named family")
{
    std::string path = "cli_checks_formula_edges.txt";
    std::ofstream(path) << "2\n1 2\n";
    CHECK(run("poly --edges " + path + " --method formula", true).exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("table json output")
{
    RunResult r = run("table --family cycle --max-n 3 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["family"] == "cycle");
    CHECK(j["min_n"] == 1);
    CHECK(j["max_n"] == 3);
    CHECK(j["rows"] == nlohmann::json::parse(R"([["1"],["2","1"],["3","3","1"]])"));
}

TEST_CASE("malformed edge files are usage errors")
{
    std::string path = "cli_checks_bad_edges.txt";
    std::ofstream(path) << "2\n1 5\n";
    CHECK(run("poly --edges " + path, true).exit_code == 2);
    std::remove(path.c_str());
    CHECK(run("poly --edges does_not_exist.txt", true).exit_code == 2);
}

TEST_CASE("verify subcommand reports and is deterministic")
{
    RunResult r = run("verify --checks tribonacci_modes,h2_asymmetry,wheel_join_consistency "
                      "--seed 0");
    CHECK(r.exit_code == 0);
    nlohmann::json report = nlohmann::json::parse(r.output);
    CHECK(report["version"] == 1);
    REQUIRE(report["checks"].size() == 3);
    for (const auto& c : report["checks"]) {
        CHECK(c["status"] == "pass");
        CHECK(c["counterexample"].is_null());
    }
    CHECK(report["checks"][0]["name"] == "h2_asymmetry"); // sorted by name

    RunResult again = run("verify --checks engine_vs_oracle_random --seed 9");
    RunResult again2 = run("verify --checks engine_vs_oracle_random --seed 9");
    CHECK(again.output == again2.output);
    CHECK(run("verify --checks no_such_check", true).exit_code == 2);
}

TEST_CASE("a default verify run passes end to end")
{
    RunResult r = run("verify");
    CHECK(r.exit_code == 0);
    nlohmann::json report = nlohmann::json::parse(r.output);
    CHECK(report["checks"].size() == 20);
    for (const auto& c : report["checks"])
        CHECK(c["status"] == "pass");
}

TEST_CASE("a corrupted formula turns into exit 1 plus a counterexample")
{
    RunResult r = run("verify --checks self_test_corrupted_formula");
    CHECK(r.exit_code == 1);
    nlohmann::json report = nlohmann::json::parse(r.output);
    CHECK(report["checks"][0]["status"] == "fail");
    nlohmann::json ce = report["checks"][0]["counterexample"];
    CHECK(ce["n"] == 4);
    CHECK(ce["k"] == 2);
    CHECK(ce["expected"] == "6");
    CHECK(ce["got"] == "7");
}
