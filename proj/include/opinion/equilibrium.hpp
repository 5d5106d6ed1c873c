#pragma once

#include <Eigen/Core>
#include <span>

#include "opinion/follower_system.hpp"

namespace opinion {

enum class SolveMethod { dense, iterative };

/// Follower equilibrium opinions and their sum.
struct OpinionState {
    Eigen::VectorXd x_followers;  // entries in [0, 1]
    double h_value = 0.0;         // sum of entries
};

/// Closed-form equilibrium x = L_F^{-1} b via a dense Cholesky solve or the
/// iterative solver at the given tolerance.
OpinionState equilibrium(const FollowerSystem& sys, SolveMethod method,
                         double delta = 1e-10, int dense_cap = kDenseCapDefault);

/// Synchronous neighbor averaging from the given initial follower opinions,
/// leaders pinned at 0/1. Stops once the sup-norm change drops below tol.
/// The limit does not depend on x0.
OpinionState simulate(const Graph& g, const Partition& p, const Eigen::VectorXd& x0,
                      double tol = 1e-10, long max_iters = 1000000);

/// Objective H of the graph with `added` candidate edges inserted, computed
/// from a fresh solve of the modified system. Oracle/test path, not the
/// greedy inner loop.
double objective_after(const FollowerSystem& sys, std::span<const CandidateEdge> added);

}  // namespace opinion
