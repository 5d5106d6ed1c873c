#include "opinion/follower_system.hpp"

#include <Eigen/Cholesky>

#include "opinion/errors.hpp"

namespace opinion {

FollowerSystem::FollowerSystem(int total_nodes, std::vector<int> followers,
                               std::vector<int> local_of,
                               std::vector<std::pair<int, int>> bar_edges,
                               Eigen::VectorXd w_diag, Eigen::VectorXd b_vec)
    : total_nodes_(total_nodes),
      followers_(std::move(followers)),
      local_of_(std::move(local_of)),
      bar_edges_(std::move(bar_edges)),
      w_diag_(std::move(w_diag)),
      b_vec_(std::move(b_vec)) {
    rebuild_matrix();
}

void FollowerSystem::rebuild_matrix() {
    const int n = nf();
    Eigen::VectorXd diag = w_diag_;
    for (const auto& [u, v] : bar_edges_) {
        diag[u] += 1.0;
        diag[v] += 1.0;
    }
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(static_cast<size_t>(n) + 2 * bar_edges_.size());
    for (int i = 0; i < n; ++i) triplets.emplace_back(i, i, diag[i]);
    for (const auto& [u, v] : bar_edges_) {
        triplets.emplace_back(u, v, -1.0);
        triplets.emplace_back(v, u, -1.0);
    }
    matrix_.resize(n, n);
    matrix_.setFromTriplets(triplets.begin(), triplets.end());
    matrix_.makeCompressed();
}

FollowerSystem FollowerSystem::with_added(std::span<const CandidateEdge> added) const {
    FollowerSystem out = *this;
    for (const auto& e : added) {
        const int j = out.local_index(e.follower);
        if (j < 0) throw ConfigError("candidate follower is not a follower node");
        out.w_diag_[j] += 1.0;
        out.b_vec_[j] += 1.0;
    }
    out.rebuild_matrix();
    return out;
}

FollowerSystem build_follower_system(const Graph& g, const Partition& p) {
    const int nf = p.follower_count();
    std::vector<char> in_s1(static_cast<size_t>(g.node_count()), 0);
    for (int a : p.s1) in_s1[static_cast<size_t>(a)] = 1;

    std::vector<std::pair<int, int>> bar_edges;
    Eigen::VectorXd w = Eigen::VectorXd::Zero(nf);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(nf);
    for (int j = 0; j < nf; ++j) {
        const int i = p.followers[static_cast<size_t>(j)];
        for (int v : g.neighbors(i)) {
            const int lv = p.local_of[static_cast<size_t>(v)];
            if (lv >= 0) {
                if (lv > j) bar_edges.emplace_back(j, lv);
            } else {
                w[j] += 1.0;
                if (in_s1[static_cast<size_t>(v)]) b[j] += 1.0;
            }
        }
    }
    return FollowerSystem(g.node_count(), p.followers, p.local_of, std::move(bar_edges),
                          std::move(w), std::move(b));
}

DenseInverse dense_inverse(const FollowerSystem& sys, int cap) {
    const int n = sys.nf();
    if (n > cap) throw SizeCapExceeded(n, cap);
    Eigen::MatrixXd dense(sys.matrix());
    Eigen::LLT<Eigen::MatrixXd> llt(dense);
    if (llt.info() != Eigen::Success)
        throw NumericalError("Cholesky factorization of the follower block failed");
    Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(n, n));
    inv = ((inv + inv.transpose()) * 0.5).eval();
    return DenseInverse{std::move(inv)};
}

DenseInverse sherman_morrison_update(DenseInverse inv, int j) {
    const Eigen::VectorXd col = inv.matrix.col(j);
    const double scale = 1.0 / (1.0 + col[j]);
    inv.matrix.noalias() -= (col * col.transpose()) * scale;
    return inv;
}

}  // namespace opinion
