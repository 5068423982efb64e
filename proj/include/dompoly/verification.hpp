#ifndef DOMPOLY_VERIFICATION_HPP
#define DOMPOLY_VERIFICATION_HPP

#include "dompoly/oracle.hpp"

#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace dompoly {

// One cross-verification: an identity or equivalence checked over a fixed
// range, with the first counterexample captured on failure.
struct CheckResult {
    std::string name;
    std::string range;
    bool pass = true;
    std::string counterexample = {}; // JSON object text; empty when passing
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    int cap = kDefaultOracleCap; // clamps the enumeration side of each check
    int threads = 0;
    std::vector<std::string> only; // names to run; empty = all
};

std::vector<std::string> check_names();

// Runs the checks (all, or the named subset), returning results sorted by
// name.  Same seed, same report.  Unknown names in `only` throw
// std::domain_error.
std::vector<CheckResult> run_checks(const VerifyOptions& opts);

// {"version": 1, "checks": [{name, range, status, counterexample}]}
nlohmann::json report_json(const std::vector<CheckResult>& results);

} // namespace dompoly

#endif
