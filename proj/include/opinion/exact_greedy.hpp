#pragma once

#include <Eigen/Core>

#include "opinion/follower_system.hpp"
#include "opinion/selection.hpp"

namespace opinion {

/// Exact objective increase from adding one (1-leader, follower) edge whose
/// follower has local index j:
///   gain = 1^T M e_j (1 - e_j^T M b) / (1 + e_j^T M e_j),  M = L_F^{-1}.
double marginal_gain(const DenseInverse& inv, const Eigen::VectorXd& b, int j);

/// k rounds of exact greedy: scan the remaining candidates for the maximum
/// gain (ties resolved by candidate order), then fold the chosen edge into
/// the maintained inverse via a rank-one update and bump b.
SelectionResult select_exact(const Graph& g, const Partition& p, const CandidateSet& q,
                             int k, int dense_cap = kDenseCapDefault);

}  // namespace opinion
