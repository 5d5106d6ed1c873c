#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <span>
#include <utility>
#include <vector>

#include "opinion/graph.hpp"

namespace opinion {

/// Follower-block system of a partitioned graph. The matrix splits as
/// L_F = Bbar^T Bbar + W, where Bbar is the incidence matrix of the
/// follower-induced subgraph, W[i] counts edges from follower i to any
/// leader, and b[i] counts edges from follower i to 1-leaders.
/// L_F is SPD whenever the graph is connected and leaders exist.
class FollowerSystem {
public:
    FollowerSystem(int total_nodes, std::vector<int> followers, std::vector<int> local_of,
                   std::vector<std::pair<int, int>> bar_edges, Eigen::VectorXd w_diag,
                   Eigen::VectorXd b_vec);

    int nf() const { return static_cast<int>(followers_.size()); }
    int total_nodes() const { return total_nodes_; }

    const std::vector<std::pair<int, int>>& bar_edges() const { return bar_edges_; }
    const Eigen::VectorXd& w_diag() const { return w_diag_; }
    const Eigen::VectorXd& b_vec() const { return b_vec_; }
    const Eigen::SparseMatrix<double>& matrix() const { return matrix_; }

    int local_index(int global) const { return local_of_[static_cast<size_t>(global)]; }
    int global_index(int local) const { return followers_[static_cast<size_t>(local)]; }

    // Copy with candidate edges applied: each (1-leader, follower) edge bumps
    // w_diag and b_vec at the follower, i.e. L_F gains e_j e_j^T and b gains e_j.
    FollowerSystem with_added(std::span<const CandidateEdge> added) const;

private:
    void rebuild_matrix();

    int total_nodes_;
    std::vector<int> followers_;
    std::vector<int> local_of_;
    std::vector<std::pair<int, int>> bar_edges_;  // local indices, u < v
    Eigen::VectorXd w_diag_;
    Eigen::VectorXd b_vec_;
    Eigen::SparseMatrix<double> matrix_;
};

FollowerSystem build_follower_system(const Graph& g, const Partition& p);

struct DenseInverse {
    Eigen::MatrixXd matrix;  // L_F^{-1}: symmetric, entrywise positive
};

inline constexpr int kDenseCapDefault = 20000;

DenseInverse dense_inverse(const FollowerSystem& sys, int cap = kDenseCapDefault);

/// Inverse of L_F + e_j e_j^T given the inverse of L_F:
/// M' = M - M e_j e_j^T M / (1 + M_jj).
DenseInverse sherman_morrison_update(DenseInverse inv, int j);

}  // namespace opinion
