#include "opinion/exact_greedy.hpp"

#include <chrono>
#include <vector>

#include "opinion/errors.hpp"

namespace opinion {

double marginal_gain(const DenseInverse& inv, const Eigen::VectorXd& b, int j) {
    const auto& m = inv.matrix;
    const double ones_mj = m.col(j).sum();
    const double xj = m.row(j).dot(b);
    const double djj = m(j, j);
    return ones_mj * (1.0 - xj) / (1.0 + djj);
}

SelectionResult select_exact(const Graph& g, const Partition& p, const CandidateSet& q,
                             int k, int dense_cap) {
    if (k < 1) throw ConfigError("k must be at least 1");
    using clock = std::chrono::steady_clock;

    const FollowerSystem sys = build_follower_system(g, p);
    DenseInverse inv = dense_inverse(sys, dense_cap);
    Eigen::VectorXd b = sys.b_vec();

    SelectionResult result;
    result.algorithm_tag = "exact";
    const int q_size = static_cast<int>(q.edges.size());
    const int rounds = std::min(k, q_size);
    result.truncated = k > q_size;
    result.h_trace.push_back((inv.matrix * b).sum());

    std::vector<char> taken(static_cast<size_t>(q_size), 0);
    for (int round = 0; round < rounds; ++round) {
        const auto started = clock::now();
        const Eigen::VectorXd col_sums = inv.matrix * Eigen::VectorXd::Ones(sys.nf());
        const Eigen::VectorXd x = inv.matrix * b;

        int best = -1;
        double best_gain = 0.0;
        for (int idx = 0; idx < q_size; ++idx) {
            if (taken[static_cast<size_t>(idx)]) continue;
            const int j = sys.local_index(q.edges[static_cast<size_t>(idx)].follower);
            const double gain =
                col_sums[j] * (1.0 - x[j]) / (1.0 + inv.matrix(j, j));
            if (best < 0 || gain > best_gain) {
                best = idx;
                best_gain = gain;
            }
        }

        const CandidateEdge chosen = q.edges[static_cast<size_t>(best)];
        const int j = sys.local_index(chosen.follower);
        taken[static_cast<size_t>(best)] = 1;
        inv = sherman_morrison_update(std::move(inv), j);
        b[j] += 1.0;

        result.chosen.push_back(chosen);
        result.gains.push_back(best_gain);
        result.h_trace.push_back((inv.matrix * b).sum());
        result.elapsed_ms.push_back(
            std::chrono::duration<double, std::milli>(clock::now() - started).count());
    }
    return result;
}

}  // namespace opinion
