#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "opinion/selection.hpp"

namespace opinion {

enum class BaselineKind { random, top_degree, top_pagerank, top_closeness, top_betweenness };
enum class CentralityKind { degree, pagerank, closeness, betweenness };

struct PageRankOptions {
    double damping = 0.85;
    double tol = 1e-10;
    long max_iters = 100000;
};

/// Per-node centrality on the whole graph. Closeness is (n-1)/sum of BFS
/// distances; betweenness is Brandes' accumulation over unordered pairs with
/// endpoints excluded; PageRank is a power iteration (sums to one).
Eigen::VectorXd centrality(const Graph& g, CentralityKind kind,
                           const PageRankOptions& pr = {});

/// Candidates ranked by the centrality of their follower endpoint on the
/// original graph (ties by candidate order), or sampled uniformly without
/// replacement for the random kind. h_trace comes from fresh solves.
SelectionResult select_baseline(const Graph& g, const Partition& p, const CandidateSet& q,
                                int k, BaselineKind kind, std::uint64_t seed);

inline constexpr long kOracleCapDefault = 2000000;

/// Exhaustive search over all k-subsets of the candidate set; ties broken
/// toward the lexicographically first subset. Refuses to enumerate more than
/// `cap` subsets.
SelectionResult select_oracle(const Graph& g, const Partition& p, const CandidateSet& q,
                              int k, long cap = kOracleCapDefault);

}  // namespace opinion
