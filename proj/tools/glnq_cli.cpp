// glnq-cli -- exact verification runs for the representation theory of
// GL_n(F_q): character tables, distinction reports for symmetric pairs,
// PSH-algebra self-checks and the group-side dictionary crosscheck.
//
// Exit codes: 0 all checks pass, 1 a mathematical assertion failed,
// 2 operational error (bad configuration, budget exceeded, cache trouble).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "glnq/glnq.hpp"
#include "glnq/report.hpp"

using namespace glnq;

namespace {

struct Options {
    int n = 1;
    long long q = 3;
    int p = -1; // -1: all p
    std::string cache_dir;
    int threads = 1;
    std::string json_path;
    long long max_order = Budget{}.max_group_order;
    long long max_unipotent = Budget{}.max_unipotent;
    bool stretch = false;
    int max_degree = 6;          // psh-selfcheck
    std::string composition;     // geom-check
};

Budget make_budget(const Options& opt) {
    Budget b;
    b.max_group_order = opt.max_order;
    b.max_unipotent = opt.max_unipotent;
    b.stretch = opt.stretch;
    b.threads = opt.threads;
    return b;
}

std::string resolve_cache_dir(const Options& opt) {
    if (!opt.cache_dir.empty()) return opt.cache_dir;
    if (const char* env = std::getenv("GLNQ_CACHE_DIR")) return env;
    return ".glnq-cache";
}

// Mathematical configuration only: no thread counts, no paths, so the JSON
// report is byte-identical for identical runs.
Json config_json(const std::string& command, const Options& opt, bool with_p) {
    Json config;
    config["command"] = command;
    config["n"] = opt.n;
    config["q"] = opt.q;
    if (with_p && opt.p >= 0) config["p"] = opt.p;
    config["max_order"] = opt.max_order;
    config["stretch"] = opt.stretch;
    return config;
}

void emit_json(const Options& opt, const Json& doc) {
    if (opt.json_path.empty()) return;
    if (opt.json_path == "-") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(opt.json_path, std::ios::trunc);
    if (!out) throw ConfigError("cannot open JSON output path " + opt.json_path);
    out << doc.dump(2) << "\n";
}

void check_q(long long q) {
    long long p;
    int f;
    factor_prime_power(q, p, f); // throws on bad q
}

std::multiset<long long> degree_multiset(const CharacterTable& t) {
    std::multiset<long long> out;
    for (const auto& chi : t.chars()) out.insert(chi.degree);
    return out;
}

int cmd_table(const Options& opt) {
    check_q(opt.q);
    TableCache cache(make_budget(opt), resolve_cache_dir(opt));
    auto start = std::chrono::steady_clock::now();
    const CharacterTable& t = cache.get(opt.n, opt.q);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    BigInt sum_sq(0);
    for (const auto& chi : t.chars()) sum_sq += BigInt(chi.degree) * BigInt(chi.degree);
    std::cout << "GL_" << opt.n << "(F_" << opt.q << "): |G| = " << t.group().order().to_string()
              << ", classes = " << t.size() << ", exponent = " << t.exponent() << "\n";
    std::cout << "degrees:";
    for (long long d : degree_multiset(t)) std::cout << " " << d;
    std::cout << "\nsum of squared degrees = " << sum_sq.to_string() << "\n";
    std::cout << "elapsed: " << elapsed.count() << " s\n";

    Json summary;
    summary["group_order"] = t.group().order().to_string();
    summary["classes"] = t.size();
    summary["exponent"] = t.exponent();
    Json degrees = Json::array();
    for (long long d : degree_multiset(t)) degrees.push_back(d);
    summary["degrees"] = std::move(degrees);
    emit_json(opt, wrap_reports(config_json("table", opt, false), Json::array({summary})));
    return 0;
}

int cmd_verify_main(const Options& opt, bool single_p) {
    check_q(opt.q);
    if (single_p && opt.p < 0) throw ConfigError("distinction requires --p");
    if (opt.p > opt.n) throw ConfigError("--p must lie in [0, n]");
    TableCache cache(make_budget(opt), resolve_cache_dir(opt));
    auto start = std::chrono::steady_clock::now();
    const CharacterTable& t = cache.get(opt.n, opt.q);

    std::vector<DistinctionReport> reports;
    if (opt.p >= 0)
        reports.push_back(build_distinction_report(t, opt.p, cache.budget()));
    else
        reports = verify_main_theorem(t, cache.budget());

    bool all_hold = true;
    Json json_reports = Json::array();
    for (const DistinctionReport& report : reports) {
        DistinctionReport cusp = cuspidal_distinction_survey(report);
        long long distinguished = 0, max_dim = 0;
        for (const DistinctionRow& row : report.rows) {
            if (row.distinction_dimension > 0) ++distinguished;
            max_dim = std::max(max_dim, row.distinction_dimension);
        }
        std::cout << "p = " << report.involution.p << ": " << report.rows.size()
                  << " irreducibles, " << distinguished << " distinguished, max dim = " << max_dim
                  << ", theorem " << (report.theorem_holds ? "holds" : "FAILS")
                  << ", cuspidal case " << (cusp.theorem_holds ? "holds" : "FAILS") << "\n";
        if (!report.theorem_holds) {
            all_hold = false;
            for (int idx : report.counterexamples)
                std::cout << "  counterexample: character " << idx << " (degree "
                          << report.rows[idx].degree << ") distinguished but not self-dual\n";
        }
        json_reports.push_back(distinction_report_json(report));
    }
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cout << "elapsed: " << elapsed.count() << " s\n";

    emit_json(opt, wrap_reports(config_json(single_p ? "distinction" : "verify-main", opt, true),
                                json_reports));
    return all_hold ? 0 : 1;
}

int cmd_crosscheck(const Options& opt) {
    check_q(opt.q);
    TableCache cache(make_budget(opt), resolve_cache_dir(opt));
    auto start = std::chrono::steady_clock::now();
    CrosscheckReport report =
        crosscheck_against_group(opt.n, opt.q, cache.provider(opt.q), cache.budget());
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    std::cout << "cuspidal labels per rank:";
    for (int c : report.cuspidals_per_rank) std::cout << " " << c;
    std::cout << "\nchecks run: " << report.checks << "\n";
    std::cout << "dictionary " << (report.ok ? "consistent" : "FAILED") << "\n";
    if (!report.ok) std::cout << "witness: " << report.failure << "\n";
    std::cout << "elapsed: " << elapsed.count() << " s\n";

    emit_json(opt, wrap_reports(config_json("crosscheck", opt, false),
                                Json::array({crosscheck_report_json(report)})));
    return report.ok ? 0 : 1;
}

int cmd_psh_selfcheck(const Options& opt) {
    // Generic label set: a self-dual degree-1 symbol, a dual pair of
    // degree-1 symbols, and a self-dual degree-2 symbol.
    psh::LabelSet labels;
    labels.add(1, 1, 1);
    labels.add(2, 1, 3);
    labels.add(3, 1, 2);
    labels.add(4, 2, 4);
    psh::SelfCheckResult result = psh::run_axiom_checks(labels, opt.max_degree);
    std::cout << "psh axioms to degree " << opt.max_degree << ": " << result.cases << " cases, "
              << (result.ok ? "all hold" : "FAILED") << "\n";
    if (!result.ok) std::cout << "witness: " << result.failure << "\n";

    Json summary;
    summary["max_degree"] = opt.max_degree;
    summary["cases"] = result.cases;
    summary["ok"] = result.ok;
    if (!result.ok) summary["failure"] = result.failure;
    Json config;
    config["command"] = "psh-selfcheck";
    config["max_degree"] = opt.max_degree;
    emit_json(opt, wrap_reports(config, Json::array({summary})));
    return result.ok ? 0 : 1;
}

int cmd_geom_check(const Options& opt) {
    check_q(opt.q);
    if (opt.p < 0) throw ConfigError("geom-check requires --p");
    if (opt.composition.empty()) throw ConfigError("geom-check requires --comp");
    std::vector<int> parts;
    std::stringstream ss(opt.composition);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(std::stoi(item));
    CompositionSpec comp(parts);
    if (comp.total() != opt.n) throw ConfigError("--comp must sum to n");

    GroupContext G({opt.n, opt.q});
    G.build_class_table(opt.threads);
    DoubleCosetReport report = double_coset_geometric_check(G, comp, {opt.n, opt.p});
    std::cout << report.cosets.size() << " double cosets; "
              << (report.all_have_witness ? "every coset has a torus-normalizing witness"
                                          : "WITNESS MISSING in some coset")
              << "\n";
    emit_json(opt, wrap_reports(config_json("geom-check", opt, true),
                                Json::array({double_coset_report_json(report)})));
    return report.all_have_witness ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact character-theoretic verification for GL_n(F_q) symmetric pairs"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool with_p) {
        cmd->add_option("--n", opt.n, "rank n of GL_n")->check(CLI::Range(1, 8));
        cmd->add_option("--q", opt.q, "odd prime power q");
        if (with_p) cmd->add_option("--p", opt.p, "involution signature: A = diag(I_p, -I_{n-p})");
        cmd->add_option("--cache", opt.cache_dir, "table cache directory (default $GLNQ_CACHE_DIR)");
        cmd->add_option("--threads", opt.threads, "worker threads (results are thread-invariant)");
        cmd->add_option("--json", opt.json_path, "write the JSON report to this path");
        cmd->add_option("--max-order", opt.max_order, "largest allowed group order");
        cmd->add_option("--max-unipotent", opt.max_unipotent, "largest allowed unipotent sweep");
        cmd->add_flag("--stretch", opt.stretch, "allow rank 4 (GL_4(F_3) sized runs)");
    };

    CLI::App* table = app.add_subcommand("table", "build (or load) and summarize a character table");
    add_common(table, false);
    CLI::App* verify = app.add_subcommand("verify-main", "verify: distinguished implies self-dual");
    add_common(verify, true);
    CLI::App* dist = app.add_subcommand("distinction", "distinction report for a single p");
    add_common(dist, true);
    CLI::App* cross = app.add_subcommand("crosscheck", "group side vs PSH dictionary");
    add_common(cross, false);
    CLI::App* pshcheck = app.add_subcommand("psh-selfcheck", "PSH axioms on a generic label set");
    pshcheck->add_option("--max-degree", opt.max_degree, "exhaustive degree bound")
        ->check(CLI::Range(1, 8));
    pshcheck->add_option("--json", opt.json_path, "write the JSON report to this path");
    CLI::App* geom = app.add_subcommand("geom-check", "double-coset torus-normalizing witnesses");
    add_common(geom, true);
    geom->add_option("--comp", opt.composition, "parabolic composition, e.g. 1,1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (table->parsed()) return cmd_table(opt);
        if (verify->parsed()) return cmd_verify_main(opt, false);
        if (dist->parsed()) return cmd_verify_main(opt, true);
        if (cross->parsed()) return cmd_crosscheck(opt);
        if (pshcheck->parsed()) return cmd_psh_selfcheck(opt);
        if (geom->parsed()) return cmd_geom_check(opt);
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const CacheError& e) {
        std::cerr << "cache error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
