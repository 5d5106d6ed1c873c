#include <CLI11.hpp>
#include <cstdio>
#include <string>
#include <vector>

#include "opinion/errors.hpp"
#include "opinion/harness.hpp"

namespace {

struct CommonFlags {
    std::string graph;
    std::vector<std::string> graphs;
    std::string s0, s1, random_leaders, leaders_file;
    int k = 1;
    std::string alg = "exact";
    double eps = 0.3;
    bool eps_given = false;
    std::vector<double> eps_set;
    double eta = 0.9;
    std::uint64_t seed = 1;
    std::string tolerance = "practical";
    int threads = 0;
    std::string out = "-";
    bool minimize = false;
    long oracle_cap = opinion::kOracleCapDefault;
    std::string strategies;
};

std::vector<opinion::NodeId> parse_id_list(const std::string& text) {
    std::vector<opinion::NodeId> ids;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        if (!token.empty()) ids.push_back(std::stoll(token));
    }
    return ids;
}

opinion::LeaderSpec resolve_leaders(const CommonFlags& f) {
    opinion::LeaderSpec spec;
    if (!f.leaders_file.empty()) return opinion::parse_leader_file(f.leaders_file);
    if (!f.random_leaders.empty()) {
        const auto counts = parse_id_list(f.random_leaders);
        if (counts.size() != 2)
            throw opinion::ConfigError("--random-leaders expects 'n0,n1'");
        spec.random = true;
        spec.n0 = static_cast<int>(counts[0]);
        spec.n1 = static_cast<int>(counts[1]);
        return spec;
    }
    if (f.s0.empty() || f.s1.empty())
        throw opinion::ConfigError(
            "leaders required: --s0/--s1, --random-leaders, or --leaders FILE");
    spec.s0 = parse_id_list(f.s0);
    spec.s1 = parse_id_list(f.s1);
    return spec;
}

opinion::ToleranceMode resolve_mode(const std::string& name) {
    if (name == "practical") return opinion::ToleranceMode::practical;
    if (name == "paper-strict") return opinion::ToleranceMode::paper_strict;
    throw opinion::ConfigError("unknown tolerance mode: " + name);
}

void add_leader_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--s0", f.s0, "comma-separated external ids of 0-leaders");
    cmd->add_option("--s1", f.s1, "comma-separated external ids of 1-leaders");
    cmd->add_option("--random-leaders", f.random_leaders, "draw n0,n1 leaders at random");
    cmd->add_option("--leaders", f.leaders_file, "leader spec file (s0:/s1: lines)");
}

void add_shared_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--eta", f.eta, "candidate threshold in (1/2, 1)")->capture_default_str();
    cmd->add_option("--seed", f.seed, "random seed")->capture_default_str();
    cmd->add_option("--tolerance", f.tolerance, "practical | paper-strict")
        ->capture_default_str();
    cmd->add_option("--threads", f.threads, "worker cap (0 = hardware)")->capture_default_str();
    cmd->add_option("--out", f.out, "output CSV path ('-' = stdout)")->capture_default_str();
    cmd->add_flag("--minimize", f.minimize, "swap leader roles and minimize the opinion");
}

int run(int argc, char** argv) {
    CLI::App app{"Leader-edge selection for opinion dynamics on social graphs"};
    app.require_subcommand(1);
    CommonFlags f;

    auto* sel = app.add_subcommand("select", "run one selection algorithm");
    sel->add_option("--graph", f.graph, "edge-list file")->required();
    sel->add_option("--k", f.k, "number of edges to add")->required();
    sel->add_option("--alg", f.alg, "exact | approx | oracle | random | top-*")->required();
    sel->add_option("--eps", f.eps, "approximation parameter in (0, 1/2)")
        ->each([&](const std::string&) { f.eps_given = true; });
    sel->add_option("--oracle-cap", f.oracle_cap, "subset-enumeration cap")
        ->capture_default_str();
    add_leader_flags(sel, f);
    add_shared_flags(sel, f);

    auto* cmp = app.add_subcommand("compare", "run several strategies on one instance");
    cmp->add_option("--graph", f.graph, "edge-list file")->required();
    cmp->add_option("--k", f.k, "number of edges to add")->required();
    cmp->add_option("--strategies", f.strategies, "comma-separated strategy names")->required();
    cmp->add_option("--eps", f.eps, "approximation parameter for approx")
        ->each([&](const std::string&) { f.eps_given = true; });
    cmp->add_option("--oracle-cap", f.oracle_cap, "subset-enumeration cap")
        ->capture_default_str();
    add_leader_flags(cmp, f);
    add_shared_flags(cmp, f);

    auto* err = app.add_subcommand("error-table", "exact vs approx runtimes and errors");
    err->add_option("--graph", f.graphs, "edge-list file (repeatable)")->required();
    err->add_option("--k", f.k, "number of edges to add")->capture_default_str();
    err->add_option("--eps", f.eps_set, "eps value (repeatable)")->required();
    add_leader_flags(err, f);
    add_shared_flags(err, f);

    auto* eq = app.add_subcommand("equilibrium", "follower equilibrium opinions");
    eq->add_option("--graph", f.graph, "edge-list file")->required();
    add_leader_flags(eq, f);
    add_shared_flags(eq, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (sel->parsed()) {
        opinion::RunConfig cfg;
        cfg.graph_path = f.graph;
        cfg.leaders = resolve_leaders(f);
        cfg.algorithm = opinion::algorithm_from_name(f.alg);
        if (cfg.algorithm == opinion::Algorithm::approx && !f.eps_given)
            throw opinion::ConfigError("--eps is required for the approx algorithm");
        cfg.k = f.k;
        cfg.eps = f.eps;
        cfg.eta = f.eta;
        cfg.seed = f.seed;
        cfg.tolerance_mode = resolve_mode(f.tolerance);
        cfg.threads = f.threads;
        cfg.output_path = f.out;
        cfg.minimize = f.minimize;
        cfg.oracle_cap = f.oracle_cap;
        opinion::run_select(cfg);
    } else if (cmp->parsed()) {
        opinion::CompareConfig cfg;
        cfg.graph_path = f.graph;
        cfg.leaders = resolve_leaders(f);
        std::stringstream ss(f.strategies);
        std::string name;
        while (std::getline(ss, name, ','))
            if (!name.empty()) cfg.strategies.push_back(opinion::algorithm_from_name(name));
        if (cfg.strategies.empty()) throw opinion::ConfigError("empty strategy list");
        for (auto s : cfg.strategies)
            if (s == opinion::Algorithm::approx && !f.eps_given)
                throw opinion::ConfigError("--eps is required for the approx strategy");
        cfg.k = f.k;
        cfg.eps = f.eps;
        cfg.eta = f.eta;
        cfg.seed = f.seed;
        cfg.tolerance_mode = resolve_mode(f.tolerance);
        cfg.threads = f.threads;
        cfg.output_path = f.out;
        cfg.minimize = f.minimize;
        cfg.oracle_cap = f.oracle_cap;
        opinion::run_compare(cfg);
    } else if (err->parsed()) {
        opinion::ErrorTableConfig cfg;
        cfg.graph_paths = f.graphs;
        cfg.eps_values = f.eps_set;
        cfg.k = f.k;
        if (!f.s0.empty() || !f.random_leaders.empty() || !f.leaders_file.empty())
            cfg.leaders = resolve_leaders(f);
        cfg.eta = f.eta;
        cfg.seed = f.seed;
        cfg.tolerance_mode = resolve_mode(f.tolerance);
        cfg.threads = f.threads;
        cfg.output_path = f.out;
        cfg.minimize = f.minimize;
        opinion::run_error_table(cfg);
    } else if (eq->parsed()) {
        opinion::RunConfig cfg;
        cfg.graph_path = f.graph;
        cfg.leaders = resolve_leaders(f);
        cfg.eta = f.eta;
        cfg.seed = f.seed;
        cfg.tolerance_mode = resolve_mode(f.tolerance);
        cfg.threads = f.threads;
        cfg.output_path = f.out;
        cfg.minimize = f.minimize;
        opinion::run_equilibrium(cfg);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const opinion::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const opinion::DataError& e) {
        std::fprintf(stderr, "data error: %s\n", e.what());
        return 3;
    } catch (const opinion::NumericalError& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
