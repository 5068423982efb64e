#include "dompoly/verification.hpp"

#include "dompoly/engine.hpp"
#include "dompoly/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <random>

namespace dompoly {

namespace {

    using nlohmann::json;

    void record(CheckResult& r, json counterexample)
    {
        if (!r.pass)
            return; // keep the first one
        r.pass = false;
        r.counterexample = counterexample.dump();
    }

    void expect_eq(CheckResult& r, const BigInt& expected, const BigInt& got, json locus)
    {
        if (r.pass && expected != got) {
            locus["expected"] = expected.str();
            locus["got"] = got.str();
            record(r, locus);
        }
    }

    void expect_poly_eq(CheckResult& r, const DomPolynomial& expected,
                        const DomPolynomial& got, json locus)
    {
        if (!r.pass)
            return;
        if (expected.context() != got.context()) {
            locus["expected_context"] = expected.context();
            locus["got_context"] = got.context();
            record(r, locus);
            return;
        }
        for (int k = 0; k <= expected.context(); ++k) {
            if (expected.coeff(k) != got.coeff(k)) {
                locus["k"] = k;
                locus["expected"] = expected.coeff(k).str();
                locus["got"] = got.coeff(k).str();
                record(r, locus);
                return;
            }
        }
    }

    SimpleGraph random_graph(std::mt19937_64& rng, int n)
    {
        SimpleGraph g(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (rng() & 1)
                    g.add_edge(i, j);
        return g;
    }

    // Rejected reading of the cycle k-set identity: a binomial product in
    // place of the verified sum.  Kept so the suite can demonstrate that it
    // disagrees with exhaustive enumeration (first at k = 2, t = 2).
    BigInt cycle_kset_count_product_variant(long long k, long long t)
    {
        BigInt total = 0;
        for (long long m = 0; m <= t / 2 + 1; ++m)
            total += binomial(k - 1, t - m)
                * (binomial(t - m + 2, m + 2) * binomial(t - m, m - 2));
        return total;
    }

    int ceil_third(int n) { return (n + 2) / 3; }

    // --- the checks -----------------------------------------------------

    CheckResult check_complete_vs_oracle(const VerifyOptions& o)
    {
        CheckResult r { "complete_vs_oracle", "n = 1..14" };
        int hi = std::min(14, o.cap);
        for (int n = 1; n <= hi && r.pass; ++n)
            expect_poly_eq(r, brute_force_poly(build_family(Family::complete, n), o.cap, o.threads),
                           complete_poly(n), { { "n", n } });
        return r;
    }

    CheckResult check_engine_vs_oracle_families(const VerifyOptions& o)
    {
        CheckResult r { "engine_vs_oracle_families",
                        "paths/cycles n <= 14, wheels/completes n <= 12" };
        for (int n = 1; n <= std::min(14, o.cap) && r.pass; ++n) {
            for (Family f : { Family::path, Family::cycle }) {
                SimpleGraph g = build_family(f, n);
                expect_poly_eq(r, brute_force_poly(g, o.cap, o.threads), graph_poly(g),
                               { { "family", family_name(f) }, { "n", n } });
            }
        }
        for (int n = 1; n <= std::min(12, o.cap) && r.pass; ++n) {
            for (Family f : { Family::wheel, Family::complete }) {
                if (f == Family::wheel && n < 4)
                    continue;
                SimpleGraph g = build_family(f, n);
                expect_poly_eq(r, brute_force_poly(g, o.cap, o.threads), graph_poly(g),
                               { { "family", family_name(f) }, { "n", n } });
            }
        }
        return r;
    }

    CheckResult check_engine_vs_oracle_random(const VerifyOptions& o)
    {
        CheckResult r { "engine_vs_oracle_random", "120 graphs G(n, 1/2), n = 5..10" };
        std::mt19937_64 rng(o.seed);
        for (int n = 5; n <= std::min(10, o.cap) && r.pass; ++n) {
            for (int rep = 0; rep < 20 && r.pass; ++rep) {
                SimpleGraph g = random_graph(rng, n);
                expect_poly_eq(r, brute_force_poly(g, o.cap, o.threads), graph_poly(g),
                               { { "n", n }, { "rep", rep }, { "edges", g.edge_count() } });
            }
        }
        return r;
    }

    CheckResult check_path_closed_form_vs_oracle(const VerifyOptions& o)
    {
        CheckResult r { "path_closed_form_vs_oracle", "k + t <= 18" };
        for (int n = 1; n <= std::min(18, o.cap) && r.pass; ++n) {
            DomPolynomial truth = brute_force_poly(build_family(Family::path, n), o.cap, o.threads);
            for (int k = 1; k <= n && r.pass; ++k)
                expect_eq(r, truth.coeff(k), path_kset_count(k, n - k),
                          { { "n", n }, { "k", k } });
        }
        return r;
    }

    CheckResult check_cycle_closed_form_vs_oracle(const VerifyOptions& o)
    {
        CheckResult r { "cycle_closed_form_vs_oracle", "k + t <= 18" };
        for (int n = 1; n <= std::min(18, o.cap) && r.pass; ++n) {
            DomPolynomial truth = brute_force_poly(build_family(Family::cycle, n), o.cap, o.threads);
            for (int k = 1; k <= n && r.pass; ++k)
                expect_eq(r, truth.coeff(k), cycle_kset_count(k, n - k),
                          { { "n", n }, { "k", k } });
        }
        return r;
    }

    CheckResult check_cycle_formula_variant_rejected(const VerifyOptions& o)
    {
        CheckResult r { "cycle_formula_variant_rejected", "(k, t) = (2, 2)" };
        BigInt truth = brute_force_poly(build_family(Family::cycle, 4), o.cap, o.threads).coeff(2);
        BigInt variant = cycle_kset_count_product_variant(2, 2);
        // This check passes when the variant DISAGREES with enumeration.
        if (variant == truth)
            record(r, json { { "n", 4 },
                             { "k", 2 },
                             { "variant", variant.str() },
                             { "oracle", truth.str() },
                             { "note", "product variant unexpectedly matches" } });
        return r;
    }

    CheckResult check_path_recurrence_vs_closed_form(const VerifyOptions&)
    {
        CheckResult r { "path_recurrence_vs_closed_form", "n = 1..60" };
        for (int n = 1; n <= 60 && r.pass; ++n) {
            DomPolynomial p = path_poly(n);
            for (int k = 0; k <= n && r.pass; ++k)
                expect_eq(r, path_kset_count(k, n - k), p.coeff(k), { { "n", n }, { "k", k } });
        }
        return r;
    }

    CheckResult check_cycle_recurrence_vs_closed_form(const VerifyOptions&)
    {
        CheckResult r { "cycle_recurrence_vs_closed_form", "n = 1..60" };
        for (int n = 1; n <= 60 && r.pass; ++n) {
            DomPolynomial p = cycle_poly(n);
            for (int k = 0; k <= n && r.pass; ++k)
                expect_eq(r, cycle_kset_count(k, n - k), p.coeff(k), { { "n", n }, { "k", k } });
        }
        return r;
    }

    CheckResult check_wheel_closed_form_vs_oracle(const VerifyOptions& o)
    {
        CheckResult r { "wheel_closed_form_vs_oracle", "n = 4..14" };
        for (int n = 4; n <= std::min(14, o.cap) && r.pass; ++n) {
            DomPolynomial truth = brute_force_poly(build_family(Family::wheel, n), o.cap, o.threads);
            expect_poly_eq(r, truth, wheel_poly(n), { { "n", n } });
            DomPolynomial rim = cycle_poly(n - 1);
            for (int k = 1; k <= n && r.pass; ++k) {
                BigInt identity = binomial(n - 1, n - k) + rim.coeff(k);
                expect_eq(r, truth.coeff(k), identity, { { "n", n }, { "k", k } });
                expect_eq(r, truth.coeff(k), wheel_kset_count(k, n - k), { { "n", n }, { "k", k } });
            }
        }
        return r;
    }

    CheckResult check_wheel_join_consistency(const VerifyOptions&)
    {
        CheckResult r { "wheel_join_consistency", "n = 4..20" };
        for (int n = 4; n <= 20 && r.pass; ++n)
            expect_poly_eq(r, wheel_poly(n), join_poly(complete_poly(1), cycle_poly(n - 1)),
                           { { "n", n } });
        return r;
    }

    CheckResult check_spot_values(const VerifyOptions& o)
    {
        CheckResult r { "spot_values", "fixed instances" };
        expect_poly_eq(r, DomPolynomial(3, { 0, 1, 3, 1 }), path_poly(3), { { "graph", "P3" } });
        expect_poly_eq(r, DomPolynomial(3, { 0, 3, 3, 1 }), cycle_poly(3), { { "graph", "C3" } });
        expect_poly_eq(r, DomPolynomial(2, { 0, 2, 1 }), path_poly(2), { { "graph", "P2" } });
        expect_eq(r, 3, cycle_poly(3).coeff(1), { { "graph", "C3" }, { "k", 1 } });
        if (r.pass) {
            expect_poly_eq(r, brute_force_poly(build_family(Family::path, 3), o.cap, o.threads),
                           path_poly(3), { { "graph", "P3" }, { "via", "oracle" } });
            expect_poly_eq(r, brute_force_poly(build_family(Family::cycle, 3), o.cap, o.threads),
                           cycle_poly(3), { { "graph", "C3" }, { "via", "oracle" } });
        }
        for (int n = 2; n <= 14 && r.pass; ++n) {
            expect_eq(r, n, path_poly(n).coeff(n - 1), { { "family", "path" }, { "n", n }, { "k", n - 1 } });
            expect_eq(r, n, cycle_poly(n).coeff(n - 1), { { "family", "cycle" }, { "n", n }, { "k", n - 1 } });
            expect_eq(r, 1, path_poly(n).coeff(n), { { "family", "path" }, { "n", n }, { "k", n } });
            expect_eq(r, 1, cycle_poly(n).coeff(n), { { "family", "cycle" }, { "n", n }, { "k", n } });
        }
        for (int k = 1; k <= 6 && r.pass; ++k) {
            expect_eq(r, 1, path_kset_count(k, 2 * k), { { "family", "path" }, { "n", 3 * k }, { "k", k } });
            expect_eq(r, 3, cycle_kset_count(k, 2 * k), { { "family", "cycle" }, { "n", 3 * k }, { "k", k } });
            expect_eq(r, 1, path_poly(3 * k).coeff(k), { { "family", "path" }, { "n", 3 * k }, { "k", k } });
            expect_eq(r, 3, cycle_poly(3 * k).coeff(k), { { "family", "cycle" }, { "n", 3 * k }, { "k", k } });
        }
        return r;
    }

    TruncatedBivariateSeries residual_multiplier(int max_n, int max_k)
    {
        // 1 - (x + x^2 + x^3) y
        TruncatedBivariateSeries m(max_n, max_k);
        m.set(0, 0, 1);
        m.set(1, 1, -1);
        m.set(2, 1, -1);
        m.set(3, 1, -1);
        return m;
    }

    CheckResult gf_residual(const char* name, Family f, std::vector<BigInt> head)
    {
        const int max_n = 30, max_k = 15;
        CheckResult r { name, "maxN = 30, maxK = 15" };
        TruncatedBivariateSeries table = kset_generating_table(f, max_n, max_k);
        TruncatedBivariateSeries residual = series_mul(residual_multiplier(max_n, max_k), table);
        TruncatedBivariateSeries expected(max_n, max_k);
        for (int n = 1; n <= 3; ++n)
            expected.set(n, 1, head[n - 1]);
        for (int n = 0; n <= max_n && r.pass; ++n)
            for (int k = 0; k <= max_k && r.pass; ++k)
                expect_eq(r, expected.at(n, k), residual.at(n, k), { { "n", n }, { "k", k } });
        return r;
    }

    CheckResult check_gf_residual_paths(const VerifyOptions&)
    {
        return gf_residual("gf_residual_paths", Family::path, { 1, 2, 1 });
    }

    CheckResult check_gf_residual_cycles(const VerifyOptions&)
    {
        return gf_residual("gf_residual_cycles", Family::cycle, { 1, 2, 3 });
    }

    CheckResult check_path_kset_symmetry(const VerifyOptions&)
    {
        CheckResult r { "path_kset_symmetry", "k <= 15, k <= n <= 3k" };
        for (int k = 1; k <= 15 && r.pass; ++k) {
            UnivariateSeries s = path_kset_series(k);
            for (int n = k; n <= 3 * k && r.pass; ++n) {
                expect_eq(r, s.coeff(n), s.coeff(4 * k - n), { { "k", k }, { "n", n } });
                expect_eq(r, path_kset_count(k, n - k), path_kset_count(k, 3 * k - n),
                          { { "k", k }, { "n", n }, { "via", "closed form" } });
                expect_eq(r, s.coeff(n), path_kset_count(k, n - k),
                          { { "k", k }, { "n", n }, { "via", "series vs closed form" } });
            }
        }
        return r;
    }

    CheckResult check_h2_asymmetry(const VerifyOptions&)
    {
        CheckResult r { "h2_asymmetry", "k = 2, window n = 2..6" };
        UnivariateSeries s = cycle_kset_series(2);
        bool asymmetric = false;
        for (int n = 2; n <= 6; ++n)
            if (s.coeff(n) != s.coeff(8 - n))
                asymmetric = true;
        if (!asymmetric)
            record(r, json { { "k", 2 }, { "note", "series is unexpectedly palindromic" } });
        return r;
    }

    CheckResult check_min_cardinality_vs_oracle(const VerifyOptions& o)
    {
        CheckResult r { "min_cardinality_vs_oracle", "paths n = 1..18, cycles n = 3..18" };
        for (int n = 1; n <= std::min(18, o.cap) && r.pass; ++n) {
            DomPolynomial truth = brute_force_poly(build_family(Family::path, n), o.cap, o.threads);
            expect_eq(r, truth.coeff(ceil_third(n)), min_dominating_count(Family::path, n),
                      { { "family", "path" }, { "n", n }, { "k", ceil_third(n) } });
        }
        for (int n = 3; n <= std::min(18, o.cap) && r.pass; ++n) {
            DomPolynomial truth = brute_force_poly(build_family(Family::cycle, n), o.cap, o.threads);
            expect_eq(r, truth.coeff(ceil_third(n)), min_dominating_count(Family::cycle, n),
                      { { "family", "cycle" }, { "n", n }, { "k", ceil_third(n) } });
        }
        return r;
    }

    CheckResult check_domination_number_families(const VerifyOptions&)
    {
        CheckResult r { "domination_number_families", "paths and cycles, n = 1..18" };
        for (int n = 1; n <= 18 && r.pass; ++n) {
            expect_eq(r, ceil_third(n), domination_number(path_poly(n)),
                      { { "family", "path" }, { "n", n } });
            expect_eq(r, ceil_third(n), domination_number(cycle_poly(n)),
                      { { "family", "cycle" }, { "n", n } });
        }
        return r;
    }

    CheckResult check_tribonacci_modes(const VerifyOptions&)
    {
        CheckResult r { "tribonacci_modes", "n = 0..40" };
        const long long first_six[] = { 1, 1, 2, 4, 7, 13 };
        for (int n = 0; n < 6 && r.pass; ++n)
            expect_eq(r, first_six[n], tribonacci(n), { { "n", n } });
        for (int n = 0; n <= 40 && r.pass; ++n)
            expect_eq(r, tribonacci(n, TribonacciMode::recurrence),
                      tribonacci(n, TribonacciMode::binomial_sum), { { "n", n } });
        return r;
    }

    CheckResult check_union_vs_oracle_random(const VerifyOptions& o)
    {
        CheckResult r { "union_vs_oracle_random", "20 seeded unions, parts up to 7 vertices" };
        std::mt19937_64 rng(o.seed + 1);
        for (int rep = 0; rep < 20 && r.pass; ++rep) {
            int a = 1 + static_cast<int>(rng() % 7);
            int b = 1 + static_cast<int>(rng() % 7);
            SimpleGraph g = random_graph(rng, a), h = random_graph(rng, b);
            DomPolynomial combined = union_poly({ brute_force_poly(g, o.cap, o.threads),
                                                  brute_force_poly(h, o.cap, o.threads) });
            expect_poly_eq(r, brute_force_poly(disjoint_union(g, h), o.cap, o.threads),
                           combined, { { "rep", rep }, { "a", a }, { "b", b } });
        }
        return r;
    }

    CheckResult check_join_vs_oracle_random(const VerifyOptions& o)
    {
        CheckResult r { "join_vs_oracle_random", "20 seeded joins, n + m <= 14" };
        std::mt19937_64 rng(o.seed + 2);
        for (int rep = 0; rep < 20 && r.pass; ++rep) {
            int a = 1 + static_cast<int>(rng() % 7);
            int b = 1 + static_cast<int>(rng() % 7);
            SimpleGraph g = random_graph(rng, a), h = random_graph(rng, b);
            DomPolynomial combined = join_poly(brute_force_poly(g, o.cap, o.threads),
                                               brute_force_poly(h, o.cap, o.threads));
            expect_poly_eq(r, brute_force_poly(join(g, h), o.cap, o.threads), combined,
                           { { "rep", rep }, { "a", a }, { "b", b } });
        }
        return r;
    }

    // Deliberately broken formula; running it must produce a failing report
    // with a counterexample.  Opt-in only: it validates the harness itself.
    CheckResult check_self_test_corrupted_formula(const VerifyOptions& o)
    {
        CheckResult r { "self_test_corrupted_formula", "(k, t) = (2, 2), corrupted by +1" };
        BigInt truth = brute_force_poly(build_family(Family::cycle, 4), o.cap, o.threads).coeff(2);
        expect_eq(r, truth, cycle_kset_count(2, 2) + 1, { { "n", 4 }, { "k", 2 } });
        return r;
    }

    using CheckFn = std::function<CheckResult(const VerifyOptions&)>;

    const std::map<std::string, CheckFn>& registry()
    {
        static const std::map<std::string, CheckFn> checks = {
            { "complete_vs_oracle", check_complete_vs_oracle },
            { "cycle_closed_form_vs_oracle", check_cycle_closed_form_vs_oracle },
            { "cycle_formula_variant_rejected", check_cycle_formula_variant_rejected },
            { "cycle_recurrence_vs_closed_form", check_cycle_recurrence_vs_closed_form },
            { "domination_number_families", check_domination_number_families },
            { "engine_vs_oracle_families", check_engine_vs_oracle_families },
            { "engine_vs_oracle_random", check_engine_vs_oracle_random },
            { "gf_residual_cycles", check_gf_residual_cycles },
            { "gf_residual_paths", check_gf_residual_paths },
            { "h2_asymmetry", check_h2_asymmetry },
            { "join_vs_oracle_random", check_join_vs_oracle_random },
            { "min_cardinality_vs_oracle", check_min_cardinality_vs_oracle },
            { "path_closed_form_vs_oracle", check_path_closed_form_vs_oracle },
            { "path_kset_symmetry", check_path_kset_symmetry },
            { "path_recurrence_vs_closed_form", check_path_recurrence_vs_closed_form },
            { "spot_values", check_spot_values },
            { "tribonacci_modes", check_tribonacci_modes },
            { "union_vs_oracle_random", check_union_vs_oracle_random },
            { "wheel_closed_form_vs_oracle", check_wheel_closed_form_vs_oracle },
            { "wheel_join_consistency", check_wheel_join_consistency },
        };
        return checks;
    }

    // Not part of the default matrix; reachable only by name.
    const std::map<std::string, CheckFn>& hidden_registry()
    {
        static const std::map<std::string, CheckFn> checks = {
            { "self_test_corrupted_formula", check_self_test_corrupted_formula },
        };
        return checks;
    }

} // namespace

std::vector<std::string> check_names()
{
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry())
        names.push_back(name);
    return names;
}

std::vector<CheckResult> run_checks(const VerifyOptions& opts)
{
    std::vector<std::string> wanted = opts.only;
    if (wanted.empty())
        wanted = check_names();
    for (const std::string& name : wanted)
        if (registry().find(name) == registry().end()
            && hidden_registry().find(name) == hidden_registry().end())
            throw std::domain_error("unknown check: " + name);
    std::sort(wanted.begin(), wanted.end());
    std::vector<CheckResult> results;
    for (const std::string& name : wanted) {
        auto it = registry().find(name);
        const CheckFn& fn = it != registry().end() ? it->second : hidden_registry().at(name);
        results.push_back(fn(opts));
    }
    return results;
}

nlohmann::json report_json(const std::vector<CheckResult>& results)
{
    json checks = json::array();
    for (const CheckResult& r : results) {
        json c;
        c["name"] = r.name;
        c["range"] = r.range;
        c["status"] = r.pass ? "pass" : "fail";
        c["counterexample"] = r.counterexample.empty() ? json() : json::parse(r.counterexample);
        checks.push_back(c);
    }
    return json { { "version", 1 }, { "checks", checks } };
}

} // namespace dompoly
