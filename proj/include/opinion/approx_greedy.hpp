#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "opinion/selection.hpp"
#include "opinion/sketch.hpp"

namespace opinion {

struct ApproxConfig {
    double eps = 0.3;      // in (0, 1/2)
    double eta = 0.9;      // in (1/2, 1)
    std::uint64_t seed = 1;
    ToleranceMode tolerance_mode = ToleranceMode::practical;
    int threads = 0;       // 0 = hardware default
};

/// Estimated gain for every remaining candidate on the current graph: solves
/// h = L_F^{-1} 1 and p = L_F^{-1} b at delta1/delta2, sketches the inverse
/// diagonal at delta3, and returns
///   gain(e) = h_j (1 - p_j) / (1 + |X~ e_j|^2 + |Y~ e_j|^2)
/// for the follower j of each candidate. Deterministic for a fixed seed.
std::vector<GainEstimate> estimate_gains(const Graph& g, const Partition& p,
                                         std::span<const CandidateEdge> q_remaining,
                                         const ApproxConfig& cfg);

/// k greedy rounds over fresh gain estimates; the winning edge is inserted
/// into the graph after each round and the sketch seed advances with the
/// round index. h_trace is recomputed exactly for reporting.
SelectionResult select_approx(const Graph& g, const Partition& p, const CandidateSet& q,
                              int k, const ApproxConfig& cfg);

}  // namespace opinion
