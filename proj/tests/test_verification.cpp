#include "dompoly/verification.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace dompoly;

TEST_CASE("named subsets run and pass")
{
    VerifyOptions opts;
    opts.only = { "tribonacci_modes", "h2_asymmetry", "spot_values" };
    auto results = run_checks(opts);
    REQUIRE(results.size() == 3);
    for (const auto& r : results) {
        CHECK(r.pass);
        CHECK(r.counterexample.empty());
    }
    // sorted by name
    CHECK(results[0].name == "h2_asymmetry");
    CHECK(results[2].name == "tribonacci_modes");
}

TEST_CASE("unknown check names are rejected")
{
    VerifyOptions opts;
    opts.only = { "no_such_check" };
    CHECK_THROWS_AS(run_checks(opts), std::domain_error);
}

TEST_CASE("report schema")
{
    VerifyOptions opts;
    opts.only = { "wheel_join_consistency" };
    nlohmann::json report = report_json(run_checks(opts));
    CHECK(report["version"] == 1);
    REQUIRE(report["checks"].size() == 1);
    CHECK(report["checks"][0]["name"] == "wheel_join_consistency");
    CHECK(report["checks"][0]["status"] == "pass");
    CHECK(report["checks"][0]["counterexample"].is_null());
    CHECK(report["checks"][0].contains("range"));
}

TEST_CASE("seeded runs are reproducible")
{
    VerifyOptions opts;
    opts.seed = 42;
    opts.only = { "engine_vs_oracle_random", "union_vs_oracle_random" };
    nlohmann::json a = report_json(run_checks(opts));
    nlohmann::json b = report_json(run_checks(opts));
    CHECK(a.dump() == b.dump());
}

TEST_CASE("the catalogue exposes every check")
{
    auto names = check_names();
    CHECK(names.size() == 20);
    VerifyOptions opts;
    opts.only = { "gf_residual_paths", "gf_residual_cycles" };
    for (const auto& r : run_checks(opts))
        CHECK(r.pass);
}

TEST_CASE("the corrupted-formula fixture fails with a counterexample")
{
    VerifyOptions opts;
    opts.only = { "self_test_corrupted_formula" };
    auto results = run_checks(opts);
    REQUIRE(results.size() == 1);
    CHECK_FALSE(results[0].pass);
    nlohmann::json ce = nlohmann::json::parse(results[0].counterexample);
    CHECK(ce["n"] == 4);
    CHECK(ce["k"] == 2);
    CHECK(ce["expected"] == "6");
    CHECK(ce["got"] == "7");

    // ... and stays out of the default matrix
    for (const auto& name : check_names())
        CHECK(name != "self_test_corrupted_formula");
}
