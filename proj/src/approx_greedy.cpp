#include "opinion/approx_greedy.hpp"

#include <chrono>
#include <cstdio>

#include "opinion/equilibrium.hpp"
#include "opinion/errors.hpp"
#include "opinion/parallel.hpp"
#include "opinion/rng.hpp"

namespace opinion {

namespace {

void validate(const ApproxConfig& cfg) {
    if (!(cfg.eps > 0.0 && cfg.eps < 0.5)) throw EpsOutOfRange(cfg.eps);
    if (!(cfg.eta > 0.5 && cfg.eta < 1.0)) throw EtaOutOfRange(cfg.eta);
}

}  // namespace

std::vector<GainEstimate> estimate_gains(const Graph& g, const Partition& p,
                                         std::span<const CandidateEdge> q_remaining,
                                         const ApproxConfig& cfg) {
    validate(cfg);
    if (q_remaining.empty()) throw ConfigError("no candidate edges to estimate");

    const FollowerSystem sys = build_follower_system(g, p);
    const SolveTolerances tol =
        solve_tolerances(g.node_count(), cfg.eps, cfg.eta, cfg.tolerance_mode);
    const int threads = resolve_threads(cfg.threads);

    const Eigen::VectorXd h =
        sdd_solve(sys, Eigen::VectorXd::Ones(sys.nf()), tol.delta1);
    const Eigen::VectorXd x = sdd_solve(sys, sys.b_vec(), tol.delta2);
    const SketchPair sk = make_sketch(sys, cfg.eps, cfg.seed, cfg.tolerance_mode);
    const Eigen::VectorXd diag_est = sketched_column_norms(sys, sk, tol.delta3, threads);

    std::vector<GainEstimate> gains;
    gains.reserve(q_remaining.size());
    for (const CandidateEdge& e : q_remaining) {
        const int j = sys.local_index(e.follower);
        if (j < 0) throw ConfigError("candidate follower is not a follower node");
        gains.push_back({e, h[j] * (1.0 - x[j]) / (1.0 + diag_est[j])});
    }
    return gains;
}

SelectionResult select_approx(const Graph& g, const Partition& p, const CandidateSet& q,
                              int k, const ApproxConfig& cfg) {
    validate(cfg);
    if (k < 1) throw ConfigError("k must be at least 1");
    if (q.eta > 0.0 && q.eta != cfg.eta)
        std::fprintf(stderr,
                     "warning: candidate set was built with eta = %g but the solver "
                     "schedule uses eta = %g\n",
                     q.eta, cfg.eta);
    using clock = std::chrono::steady_clock;

    SelectionResult result;
    result.algorithm_tag = "approx";
    const int q_size = static_cast<int>(q.edges.size());
    const int rounds = std::min(k, q_size);
    result.truncated = k > q_size;

    Graph current = g;
    result.h_trace.push_back(
        equilibrium(build_follower_system(current, p), SolveMethod::iterative).h_value);

    std::vector<char> taken(static_cast<size_t>(q_size), 0);
    std::vector<CandidateEdge> remaining;
    std::vector<int> remaining_idx;
    for (int round = 0; round < rounds; ++round) {
        const auto started = clock::now();
        remaining.clear();
        remaining_idx.clear();
        for (int idx = 0; idx < q_size; ++idx) {
            if (!taken[static_cast<size_t>(idx)]) {
                remaining.push_back(q.edges[static_cast<size_t>(idx)]);
                remaining_idx.push_back(idx);
            }
        }

        ApproxConfig round_cfg = cfg;
        round_cfg.seed = derive_seed(cfg.seed, /*stream=*/0xa99, static_cast<std::uint64_t>(round));
        const auto estimates = estimate_gains(current, p, remaining, round_cfg);

        int best = -1;
        double best_gain = 0.0;
        for (int i = 0; i < static_cast<int>(estimates.size()); ++i) {
            if (best < 0 || estimates[static_cast<size_t>(i)].gain > best_gain) {
                best = i;
                best_gain = estimates[static_cast<size_t>(i)].gain;
            }
        }

        const CandidateEdge chosen = remaining[static_cast<size_t>(best)];
        taken[static_cast<size_t>(remaining_idx[static_cast<size_t>(best)])] = 1;
        current = current.with_edge(chosen.leader, chosen.follower);

        result.chosen.push_back(chosen);
        result.gains.push_back(best_gain);
        result.h_trace.push_back(
            equilibrium(build_follower_system(current, p), SolveMethod::iterative).h_value);
        result.elapsed_ms.push_back(
            std::chrono::duration<double, std::milli>(clock::now() - started).count());
    }
    return result;
}

}  // namespace opinion
