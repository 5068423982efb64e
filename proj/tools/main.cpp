// Command-line front end: polynomials, k-set tables, the cross-verification
// matrix, and integer-sequence listings.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 oracle cap
// exceeded.

#include "dompoly/engine.hpp"
#include "dompoly/families.hpp"
#include "dompoly/verification.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

namespace {

using namespace dompoly;

struct RunConfig {
    std::string family;
    std::string edges_file;
    int n = 0;
    int max_n = 0;
    std::string method; // oracle | engine | formula
    std::string source = "formula";
    std::string convention = "gamma";
    std::string format = "plain";
    std::string table_format = "csv";
    std::string order = "rows";
    int cap = kDefaultOracleCap;
    int threads = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> checks;
    std::string oeis_tag;
    int count = 10;
    int count_rows = 5;
};

SimpleGraph load_graph(const RunConfig& cfg)
{
    if (!cfg.edges_file.empty()) {
        std::ifstream in(cfg.edges_file);
        if (!in)
            throw std::domain_error("cannot open edge file: " + cfg.edges_file);
        return read_edge_list(in);
    }
    return build_family(family_from_name(cfg.family), cfg.n);
}

DomPolynomial formula_poly(const std::string& family, int n)
{
    switch (family_from_name(family)) {
    case Family::path: return path_poly(n);
    case Family::cycle: return cycle_poly(n);
    case Family::wheel: return wheel_poly(n);
    case Family::complete: return complete_poly(n);
    }
    throw std::domain_error("unknown graph family: " + family);
}

int cmd_poly(const RunConfig& cfg)
{
    std::string method = cfg.method;
    if (method.empty())
        method = cfg.edges_file.empty() ? "formula" : "engine";

    DomPolynomial p;
    if (method == "formula") {
        if (cfg.family.empty())
            throw std::domain_error("--method formula needs a named --family");
        p = formula_poly(cfg.family, cfg.n);
    } else if (method == "engine") {
        p = graph_poly(load_graph(cfg));
    } else if (method == "oracle") {
        p = brute_force_poly(load_graph(cfg), cfg.cap, cfg.threads);
    } else {
        throw std::domain_error("unknown method: " + method);
    }

    Convention conv = convention_from_name(cfg.convention);
    if (cfg.format == "plain")
        std::cout << to_plain_string(p, conv) << "\n";
    else if (cfg.format == "csv")
        std::cout << to_csv(p, conv) << "\n";
    else if (cfg.format == "json")
        std::cout << to_json(p, conv).dump(2) << "\n";
    else
        throw std::domain_error("unknown format: " + cfg.format);
    return 0;
}

int cmd_table(const RunConfig& cfg)
{
    Family f = family_from_name(cfg.family);
    if (f == Family::complete)
        throw std::domain_error("tables cover path, cycle and wheel");
    KSetTriangle t = cfg.source == "oracle" ? kset_triangle(f, cfg.max_n, cfg.cap)
                                            : formula_triangle(f, cfg.max_n);

    if (cfg.table_format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : t.rows) {
            nlohmann::json r = nlohmann::json::array();
            for (const BigInt& v : row)
                r.push_back(v.str());
            rows.push_back(r);
        }
        nlohmann::json j { { "family", family_name(t.family) },
                           { "min_n", t.min_n },
                           { "max_n", cfg.max_n },
                           { "rows", rows } };
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    const char* sep = cfg.table_format == "csv" ? "," : " ";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            std::cout << (i ? sep : "") << row[i];
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg)
{
    VerifyOptions opts;
    opts.seed = cfg.seed;
    opts.cap = cfg.cap;
    opts.threads = cfg.threads;
    opts.only = cfg.checks;
    std::vector<CheckResult> results = run_checks(opts);
    std::cout << report_json(results).dump(2) << "\n";
    for (const CheckResult& r : results) {
        if (!r.pass) {
            std::cerr << "verification failed: " << r.name
                      << " counterexample " << r.counterexample << "\n";
            return 1;
        }
    }
    return 0;
}

std::vector<BigInt> triangle_terms(const KSetTriangle& t, const std::string& order)
{
    std::vector<BigInt> terms;
    if (order == "rows") {
        for (const auto& row : t.rows)
            for (const BigInt& v : row)
                terms.push_back(v);
        return terms;
    }
    if (order != "antidiagonals")
        throw std::domain_error("unknown order: " + order);
    int max_n = t.min_n + static_cast<int>(t.rows.size()) - 1;
    for (int s = t.min_n + 1; s <= 2 * max_n; ++s)
        for (int n = t.min_n; n <= max_n; ++n) {
            int k = s - n;
            if (k >= 1 && k <= n)
                terms.push_back(t.entry(n, k));
        }
    return terms;
}

int cmd_oeis(const RunConfig& cfg)
{
    std::vector<BigInt> terms;
    if (cfg.oeis_tag == "tribonacci") {
        for (int n = 0; n < cfg.count; ++n)
            terms.push_back(tribonacci(n));
    } else {
        Family f;
        if (cfg.oeis_tag == "paths-triangle")
            f = Family::path;
        else if (cfg.oeis_tag == "cycles-triangle")
            f = Family::cycle;
        else if (cfg.oeis_tag == "wheels-triangle")
            f = Family::wheel;
        else
            throw std::domain_error("unknown sequence tag: " + cfg.oeis_tag);
        int min_n = f == Family::wheel ? 4 : 1;
        KSetTriangle t = formula_triangle(f, min_n + cfg.count_rows - 1);
        terms = triangle_terms(t, cfg.order);
    }
    for (std::size_t i = 0; i < terms.size(); ++i)
        std::cout << (i ? " " : "") << terms[i];
    std::cout << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app { "Domination polynomials of graphs: exhaustive enumeration, "
                   "a one-way digraph recurrence, and closed-form family "
                   "formulas, cross-verified" };
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_cap = [&cfg](CLI::App* c) {
        c->add_option("--cap", cfg.cap, "Vertex cap for exhaustive enumeration")
            ->check(CLI::Range(1, 30));
        c->add_option("--threads", cfg.threads, "Enumeration thread count (0 = auto)")
            ->check(CLI::Range(0, 256));
    };

    CLI::App* poly = app.add_subcommand("poly", "Compute one domination polynomial");
    auto* fam_opt = poly->add_option("--family", cfg.family, "path | cycle | wheel | complete");
    auto* n_opt = poly->add_option("--n", cfg.n, "Number of vertices")->check(CLI::PositiveNumber);
    auto* edges_opt = poly->add_option("--edges", cfg.edges_file, "Edge-list file (first line n, then i j pairs)");
    fam_opt->excludes(edges_opt);
    edges_opt->excludes(fam_opt)->excludes(n_opt);
    n_opt->needs(fam_opt);
    fam_opt->needs(n_opt);
    poly->add_option("--method", cfg.method,
                     "oracle | engine | formula (default: formula for families, engine for edge files)")
        ->check(CLI::IsMember({ "oracle", "engine", "formula" }));
    poly->add_option("--convention", cfg.convention, "D | gamma")
        ->check(CLI::IsMember({ "D", "gamma" }));
    poly->add_option("--format", cfg.format, "json | csv | plain")
        ->check(CLI::IsMember({ "json", "csv", "plain" }));
    add_cap(poly);
    poly->callback([&] {
        if (cfg.family.empty() && cfg.edges_file.empty())
            throw CLI::ValidationError("poly", "one of --family or --edges is required");
    });

    CLI::App* table = app.add_subcommand("table", "Dominating k-set triangle of a family");
    table->add_option("--family", cfg.family, "path | cycle | wheel")->required();
    table->add_option("--max-n", cfg.max_n, "Largest row order")->required()->check(CLI::PositiveNumber);
    table->add_option("--source", cfg.source, "formula | oracle")
        ->check(CLI::IsMember({ "formula", "oracle" }));
    table->add_option("--format", cfg.table_format, "json | csv | plain")
        ->check(CLI::IsMember({ "json", "csv", "plain" }));
    add_cap(table);

    CLI::App* verify = app.add_subcommand("verify", "Run the cross-verification matrix");
    verify->add_option("--checks", cfg.checks, "Subset of checks to run (comma separated)")
        ->delimiter(',');
    verify->add_option("--seed", cfg.seed, "Seed for the random-graph checks");
    add_cap(verify);

    CLI::App* oeis = app.add_subcommand("oeis", "Emit a verified integer sequence");
    oeis->add_option("tag", cfg.oeis_tag,
                     "paths-triangle | cycles-triangle | wheels-triangle | tribonacci")
        ->required();
    oeis->add_option("--count", cfg.count, "Terms to emit (tribonacci)")->check(CLI::PositiveNumber);
    oeis->add_option("--count-rows", cfg.count_rows, "Triangle rows to emit")->check(CLI::PositiveNumber);
    oeis->add_option("--order", cfg.order, "rows | antidiagonals")
        ->check(CLI::IsMember({ "rows", "antidiagonals" }));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (poly->parsed())
            return cmd_poly(cfg);
        if (table->parsed())
            return cmd_table(cfg);
        if (verify->parsed())
            return cmd_verify(cfg);
        if (oeis->parsed())
            return cmd_oeis(cfg);
    } catch (const dompoly::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
