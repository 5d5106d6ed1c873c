#include "opinion/equilibrium.hpp"

#include <Eigen/Cholesky>
#include <cmath>

#include "opinion/errors.hpp"
#include "opinion/solver.hpp"

namespace opinion {

namespace {

OpinionState finish(Eigen::VectorXd x) {
    x = x.cwiseMax(0.0).cwiseMin(1.0);  // shave solver round-off
    const double h = x.sum();
    return OpinionState{std::move(x), h};
}

}  // namespace

OpinionState equilibrium(const FollowerSystem& sys, SolveMethod method, double delta,
                         int dense_cap) {
    if (method == SolveMethod::dense) {
        const int n = sys.nf();
        if (n > dense_cap) throw SizeCapExceeded(n, dense_cap);
        Eigen::MatrixXd lf(sys.matrix());
        Eigen::LLT<Eigen::MatrixXd> llt(lf);
        if (llt.info() != Eigen::Success)
            throw NumericalError("Cholesky factorization of the follower block failed");
        return finish(llt.solve(sys.b_vec()));
    }
    return finish(sdd_solve(sys, sys.b_vec(), delta));
}

OpinionState simulate(const Graph& g, const Partition& p, const Eigen::VectorXd& x0,
                      double tol, long max_iters) {
    const int nf = p.follower_count();
    if (x0.size() != nf) throw ConfigError("x0 length does not match follower count");
    for (Eigen::Index i = 0; i < x0.size(); ++i)
        if (!(x0[i] >= 0.0 && x0[i] <= 1.0)) throw InvalidOpinion(x0[i]);

    std::vector<char> in_s1(static_cast<size_t>(g.node_count()), 0);
    for (int a : p.s1) in_s1[static_cast<size_t>(a)] = 1;

    Eigen::VectorXd x = x0;
    Eigen::VectorXd next(nf);
    for (long it = 0; it < max_iters; ++it) {
        for (int j = 0; j < nf; ++j) {
            const int u = p.followers[static_cast<size_t>(j)];
            double sum = 0.0;
            for (int v : g.neighbors(u)) {
                const int lv = p.local_of[static_cast<size_t>(v)];
                if (lv >= 0)
                    sum += x[lv];
                else if (in_s1[static_cast<size_t>(v)])
                    sum += 1.0;
            }
            next[j] = sum / static_cast<double>(g.degree(u));
        }
        const double change = (next - x).cwiseAbs().maxCoeff();
        x.swap(next);
        if (change < tol) return finish(std::move(x));
    }
    throw NoConvergence(max_iters, 0.0);
}

double objective_after(const FollowerSystem& sys, std::span<const CandidateEdge> added) {
    const FollowerSystem modified = added.empty() ? sys : sys.with_added(added);
    // small systems go through a direct factorization, larger ones through CG
    constexpr int kDenseThreshold = 512;
    if (modified.nf() <= kDenseThreshold)
        return equilibrium(modified, SolveMethod::dense).h_value;
    return equilibrium(modified, SolveMethod::iterative, 1e-10).h_value;
}

}  // namespace opinion
