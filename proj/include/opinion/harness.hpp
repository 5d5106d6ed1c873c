#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "opinion/approx_greedy.hpp"
#include "opinion/baselines.hpp"
#include "opinion/exact_greedy.hpp"
#include "opinion/selection.hpp"

namespace opinion {

enum class Algorithm {
    exact,
    approx,
    oracle,
    random,
    top_degree,
    top_pagerank,
    top_closeness,
    top_betweenness,
};

Algorithm algorithm_from_name(const std::string& name);
const char* to_string(Algorithm alg);

/// Leaders come either as explicit external-id lists or as a seeded random
/// draw of (n0, n1) nodes.
struct LeaderSpec {
    std::vector<NodeId> s0;
    std::vector<NodeId> s1;
    int n0 = 0;
    int n1 = 0;
    bool random = false;
};

// Two lines: "s0: <ids>" and "s1: <ids>", comma-separated external ids.
LeaderSpec parse_leader_file(const std::string& path);

struct RunConfig {
    std::string graph_path;
    LeaderSpec leaders;
    Algorithm algorithm = Algorithm::exact;
    int k = 1;
    double eps = 0.3;
    double eta = 0.9;
    std::uint64_t seed = 1;
    ToleranceMode tolerance_mode = ToleranceMode::practical;
    int threads = 0;
    std::string output_path;  // empty or "-" writes to stdout
    bool minimize = false;
    long oracle_cap = kOracleCapDefault;
    int dense_cap = kDenseCapDefault;
};

struct RunOutput {
    SelectionResult result;
    int nf = 0;
    double h_initial = 0.0;  // reported scale (complemented under --minimize)
    double h_final = 0.0;
    double total_ms = 0.0;
};

/// One selection run: loads the graph, resolves leaders, filters candidates,
/// dispatches the algorithm, and emits one CSV row per round plus a summary
/// row. Timing excludes graph loading.
RunOutput run_select(const RunConfig& cfg);
RunOutput run_select(const RunConfig& cfg, std::ostream& out);

struct CompareConfig {
    std::string graph_path;
    LeaderSpec leaders;
    std::vector<Algorithm> strategies;
    int k = 1;
    double eps = 0.3;
    double eta = 0.9;
    std::uint64_t seed = 1;
    ToleranceMode tolerance_mode = ToleranceMode::practical;
    int threads = 0;
    std::string output_path;
    bool minimize = false;
    long oracle_cap = kOracleCapDefault;
    int dense_cap = kDenseCapDefault;
};

struct CompareTrace {
    Algorithm strategy;
    std::vector<double> h_by_round;  // index = number of added edges
};

/// All strategies on one shared graph/partition/candidate set; long-format
/// CSV rows (strategy, round, h_exact). The oracle trace holds the true
/// optimum at every budget.
std::vector<CompareTrace> run_compare(const CompareConfig& cfg);
std::vector<CompareTrace> run_compare(const CompareConfig& cfg, std::ostream& out);

struct ErrorTableConfig {
    std::vector<std::string> graph_paths;
    std::vector<double> eps_values;
    int k = 50;
    LeaderSpec leaders;  // defaults to a random 10 + 10 draw
    double eta = 0.9;
    std::uint64_t seed = 1;
    ToleranceMode tolerance_mode = ToleranceMode::practical;
    int threads = 0;
    std::string output_path;
    bool minimize = false;
    int dense_cap = kDenseCapDefault;
};

struct ErrorTableRow {
    std::string graph;
    int nodes = 0;
    int edges = 0;
    double eps = 0.0;
    double runtime_exact_ms = 0.0;
    double runtime_approx_ms = 0.0;
    double gamma_exact = 0.0;
    double gamma_approx = 0.0;
    double relative_error = 0.0;
};

/// Exact-vs-sketched comparison per (graph, eps): selection runtimes and the
/// relative error between the two opinion gains.
std::vector<ErrorTableRow> run_error_table(const ErrorTableConfig& cfg);
std::vector<ErrorTableRow> run_error_table(const ErrorTableConfig& cfg, std::ostream& out);

/// Follower equilibrium opinions as CSV (follower_id, opinion) plus a total
/// row with the overall opinion.
double run_equilibrium(const RunConfig& cfg);
double run_equilibrium(const RunConfig& cfg, std::ostream& out);

}  // namespace opinion
