#include "opinion/harness.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "opinion/csv.hpp"
#include "opinion/equilibrium.hpp"
#include "opinion/errors.hpp"

namespace opinion {

namespace {

using clock = std::chrono::steady_clock;

double ms_since(clock::time_point start) {
    return std::chrono::duration<double, std::milli>(clock::now() - start).count();
}

struct Instance {
    Graph graph;
    Partition partition;
    CandidateSet candidates;
    double h0 = 0.0;
};

Partition resolve_partition(const Graph& g, const LeaderSpec& spec, std::uint64_t seed,
                            bool minimize) {
    Partition p = spec.random ? random_partition(g, spec.n0, spec.n1, seed)
                              : make_partition_external(g, spec.s0, spec.s1);
    return minimize ? p.swapped() : p;
}

Instance prepare(const Graph& g, const LeaderSpec& leaders, double eta,
                 std::uint64_t seed, bool minimize) {
    Instance inst{g, resolve_partition(g, leaders, seed, minimize), {}, 0.0};
    const FollowerSystem sys = build_follower_system(inst.graph, inst.partition);
    const OpinionState eq = equilibrium(sys, SolveMethod::iterative);
    inst.candidates = build_candidate_set(inst.graph, inst.partition, eq.x_followers, eta);
    inst.h0 = eq.h_value;
    return inst;
}

template <typename Fn>
auto with_output(const std::string& path, Fn&& fn) {
    if (path.empty() || path == "-") return fn(std::cout);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileError(path);
    return fn(out);
}

SelectionResult dispatch(const Instance& inst, Algorithm alg, const RunConfig& cfg) {
    switch (alg) {
        case Algorithm::exact:
            return select_exact(inst.graph, inst.partition, inst.candidates, cfg.k,
                                cfg.dense_cap);
        case Algorithm::approx: {
            ApproxConfig ac{cfg.eps, cfg.eta, cfg.seed, cfg.tolerance_mode, cfg.threads};
            return select_approx(inst.graph, inst.partition, inst.candidates, cfg.k, ac);
        }
        case Algorithm::oracle:
            return select_oracle(inst.graph, inst.partition, inst.candidates, cfg.k,
                                 cfg.oracle_cap);
        case Algorithm::random:
            return select_baseline(inst.graph, inst.partition, inst.candidates, cfg.k,
                                   BaselineKind::random, cfg.seed);
        case Algorithm::top_degree:
            return select_baseline(inst.graph, inst.partition, inst.candidates, cfg.k,
                                   BaselineKind::top_degree, cfg.seed);
        case Algorithm::top_pagerank:
            return select_baseline(inst.graph, inst.partition, inst.candidates, cfg.k,
                                   BaselineKind::top_pagerank, cfg.seed);
        case Algorithm::top_closeness:
            return select_baseline(inst.graph, inst.partition, inst.candidates, cfg.k,
                                   BaselineKind::top_closeness, cfg.seed);
        case Algorithm::top_betweenness:
            return select_baseline(inst.graph, inst.partition, inst.candidates, cfg.k,
                                   BaselineKind::top_betweenness, cfg.seed);
    }
    throw ConfigError("unknown algorithm");
}

}  // namespace

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "exact") return Algorithm::exact;
    if (name == "approx") return Algorithm::approx;
    if (name == "oracle") return Algorithm::oracle;
    if (name == "random") return Algorithm::random;
    if (name == "top-degree") return Algorithm::top_degree;
    if (name == "top-pagerank") return Algorithm::top_pagerank;
    if (name == "top-closeness") return Algorithm::top_closeness;
    if (name == "top-betweenness") return Algorithm::top_betweenness;
    throw ConfigError("unknown algorithm: " + name);
}

const char* to_string(Algorithm alg) {
    switch (alg) {
        case Algorithm::exact: return "exact";
        case Algorithm::approx: return "approx";
        case Algorithm::oracle: return "oracle";
        case Algorithm::random: return "random";
        case Algorithm::top_degree: return "top-degree";
        case Algorithm::top_pagerank: return "top-pagerank";
        case Algorithm::top_closeness: return "top-closeness";
        case Algorithm::top_betweenness: return "top-betweenness";
    }
    return "?";
}

LeaderSpec parse_leader_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError(path);
    LeaderSpec spec;
    std::string line;
    while (std::getline(in, line)) {
        const auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        const std::string key = line.substr(0, colon);
        std::vector<NodeId>* target = nullptr;
        if (key == "s0") target = &spec.s0;
        else if (key == "s1") target = &spec.s1;
        else throw ParseError("leader file: unknown key '" + key + "'");
        std::string rest = line.substr(colon + 1);
        std::stringstream ss(rest);
        std::string token;
        while (std::getline(ss, token, ',')) {
            const auto first = token.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            target->push_back(std::stoll(token.substr(first)));
        }
    }
    if (spec.s0.empty() || spec.s1.empty())
        throw ParseError("leader file must define both s0 and s1");
    return spec;
}

RunOutput run_select(const RunConfig& cfg, std::ostream& out) {
    const Graph g = load_graph_file(cfg.graph_path);
    const auto started = clock::now();
    const Instance inst = prepare(g, cfg.leaders, cfg.eta, cfg.seed, cfg.minimize);
    const SelectionResult result = dispatch(inst, cfg.algorithm, cfg);
    const double total_ms = ms_since(started);

    const double nf = static_cast<double>(inst.partition.follower_count());
    auto reported = [&](double h) { return cfg.minimize ? nf - h : h; };

    csv::Writer w(out);
    w.row({"round", "leader_id", "follower_id", "gain_estimate", "h_exact", "elapsed_ms"});
    for (size_t i = 0; i < result.chosen.size(); ++i) {
        const auto& e = result.chosen[i];
        w.row({csv::num(static_cast<int>(i) + 1),
               csv::num(static_cast<long long>(inst.graph.external_id(e.leader))),
               csv::num(static_cast<long long>(inst.graph.external_id(e.follower))),
               csv::num(result.gains[i]), csv::num(reported(result.h_trace[i + 1])),
               csv::num(result.elapsed_ms[i])});
    }
    w.row({"total", "", "", "", csv::num(reported(result.h_trace.back())),
           csv::num(total_ms)});

    RunOutput output;
    output.result = result;
    output.nf = inst.partition.follower_count();
    output.h_initial = reported(result.h_trace.front());
    output.h_final = reported(result.h_trace.back());
    output.total_ms = total_ms;
    return output;
}

RunOutput run_select(const RunConfig& cfg) {
    return with_output(cfg.output_path, [&](std::ostream& out) { return run_select(cfg, out); });
}

std::vector<CompareTrace> run_compare(const CompareConfig& cfg, std::ostream& out) {
    if (cfg.strategies.empty()) throw ConfigError("no strategies requested");
    const Graph g = load_graph_file(cfg.graph_path);
    const Instance inst = prepare(g, cfg.leaders, cfg.eta, cfg.seed, cfg.minimize);

    RunConfig rc;
    rc.k = cfg.k;
    rc.eps = cfg.eps;
    rc.eta = cfg.eta;
    rc.seed = cfg.seed;
    rc.tolerance_mode = cfg.tolerance_mode;
    rc.threads = cfg.threads;
    rc.oracle_cap = cfg.oracle_cap;
    rc.dense_cap = cfg.dense_cap;

    const double nf = static_cast<double>(inst.partition.follower_count());
    auto reported = [&](double h) { return cfg.minimize ? nf - h : h; };

    std::vector<CompareTrace> traces;
    for (Algorithm alg : cfg.strategies) {
        CompareTrace trace;
        trace.strategy = alg;
        if (alg == Algorithm::oracle) {
            // per-budget optimum, not prefixes of the final optimum
            trace.h_by_round.push_back(inst.h0);
            const int rounds = std::min(cfg.k, static_cast<int>(inst.candidates.edges.size()));
            for (int kk = 1; kk <= rounds; ++kk) {
                const SelectionResult r = select_oracle(inst.graph, inst.partition,
                                                        inst.candidates, kk, cfg.oracle_cap);
                trace.h_by_round.push_back(r.h_trace.back());
            }
        } else {
            trace.h_by_round = dispatch(inst, alg, rc).h_trace;
        }
        traces.push_back(std::move(trace));
    }

    csv::Writer w(out);
    w.row({"strategy", "round", "h_exact"});
    for (const auto& trace : traces)
        for (size_t r = 0; r < trace.h_by_round.size(); ++r)
            w.row({to_string(trace.strategy), csv::num(static_cast<int>(r)),
                   csv::num(reported(trace.h_by_round[r]))});
    return traces;
}

std::vector<CompareTrace> run_compare(const CompareConfig& cfg) {
    return with_output(cfg.output_path,
                       [&](std::ostream& out) { return run_compare(cfg, out); });
}

std::vector<ErrorTableRow> run_error_table(const ErrorTableConfig& cfg, std::ostream& out) {
    if (cfg.graph_paths.empty()) throw ConfigError("no graphs given");
    if (cfg.eps_values.empty()) throw ConfigError("no eps values given");

    LeaderSpec leaders = cfg.leaders;
    if (!leaders.random && leaders.s0.empty()) {
        leaders.random = true;
        leaders.n0 = 10;
        leaders.n1 = 10;
    }

    std::vector<ErrorTableRow> rows;
    for (const auto& path : cfg.graph_paths) {
        const Graph g = load_graph_file(path);
        const Instance inst = prepare(g, leaders, cfg.eta, cfg.seed, cfg.minimize);

        const auto exact_started = clock::now();
        const SelectionResult exact = select_exact(inst.graph, inst.partition,
                                                   inst.candidates, cfg.k, cfg.dense_cap);
        const double exact_ms = ms_since(exact_started);
        const double gamma = exact.h_trace.back() - exact.h_trace.front();

        for (double eps : cfg.eps_values) {
            ApproxConfig ac{eps, cfg.eta, cfg.seed, cfg.tolerance_mode, cfg.threads};
            const auto approx_started = clock::now();
            const SelectionResult approx =
                select_approx(inst.graph, inst.partition, inst.candidates, cfg.k, ac);
            const double approx_ms = ms_since(approx_started);
            const double gamma_tilde = approx.h_trace.back() - approx.h_trace.front();

            ErrorTableRow row;
            row.graph = path;
            row.nodes = g.node_count();
            row.edges = g.edge_count();
            row.eps = eps;
            row.runtime_exact_ms = exact_ms;
            row.runtime_approx_ms = approx_ms;
            row.gamma_exact = gamma;
            row.gamma_approx = gamma_tilde;
            row.relative_error = gamma > 0.0 ? std::abs(gamma - gamma_tilde) / gamma : 0.0;
            rows.push_back(std::move(row));
        }
    }

    csv::Writer w(out);
    w.row({"graph", "nodes", "edges", "eps", "runtime_exact_ms", "runtime_approx_ms",
           "gamma_exact", "gamma_approx", "relative_error"});
    for (const auto& r : rows)
        w.row({r.graph, csv::num(r.nodes), csv::num(r.edges), csv::num(r.eps),
               csv::num(r.runtime_exact_ms), csv::num(r.runtime_approx_ms),
               csv::num(r.gamma_exact), csv::num(r.gamma_approx),
               csv::num(r.relative_error)});
    return rows;
}

std::vector<ErrorTableRow> run_error_table(const ErrorTableConfig& cfg) {
    return with_output(cfg.output_path,
                       [&](std::ostream& out) { return run_error_table(cfg, out); });
}

double run_equilibrium(const RunConfig& cfg, std::ostream& out) {
    const Graph g = load_graph_file(cfg.graph_path);
    Partition p = resolve_partition(g, cfg.leaders, cfg.seed, cfg.minimize);
    const FollowerSystem sys = build_follower_system(g, p);
    const OpinionState eq = equilibrium(sys, SolveMethod::iterative);

    // under --minimize the partition is swapped; complementing recovers the
    // opinions of the original labeling
    const bool flip = cfg.minimize;
    csv::Writer w(out);
    w.row({"follower_id", "opinion"});
    double h = 0.0;
    for (int j = 0; j < p.follower_count(); ++j) {
        const double x = flip ? 1.0 - eq.x_followers[j] : eq.x_followers[j];
        h += x;
        w.row({csv::num(static_cast<long long>(g.external_id(p.followers[static_cast<size_t>(j)]))),
               csv::num(x)});
    }
    w.row({"total", csv::num(h)});
    return h;
}

double run_equilibrium(const RunConfig& cfg) {
    return with_output(cfg.output_path,
                       [&](std::ostream& out) { return run_equilibrium(cfg, out); });
}

}  // namespace opinion
