#include "opinion/solver.hpp"

#include <algorithm>
#include <cmath>

#include "opinion/errors.hpp"

namespace opinion {

SolveTolerances solve_tolerances(int n, double eps, double eta, ToleranceMode mode) {
    if (!(eps > 0.0 && eps < 0.5)) throw EpsOutOfRange(eps);
    if (!(eta > 0.5 && eta < 1.0)) throw EtaOutOfRange(eta);
    const double nn = static_cast<double>(n);
    const double root = std::sqrt(6.0 * (nn * nn - 1.0));
    SolveTolerances tol{};
    tol.mode = mode;
    tol.delta1 = eps / (2.0 * nn * nn * root);
    tol.delta2 = (1.0 - eta) * eps / (nn * nn * root);
    tol.delta3 = eps / (72.0 * nn * nn) *
                 std::sqrt(6.0 * (1.0 - eps / 12.0) / ((1.0 + eps / 12.0) * (nn * nn - 1.0)));
    if (mode == ToleranceMode::practical) {
        tol.delta1 = std::max(tol.delta1, kDeltaFloor);
        tol.delta2 = std::max(tol.delta2, kDeltaFloor);
        tol.delta3 = std::max(tol.delta3, kDeltaFloor);
    }
    return tol;
}

Eigen::VectorXd sdd_solve(const FollowerSystem& sys, const Eigen::VectorXd& rhs,
                          double delta) {
    const int n = sys.nf();
    if (rhs.size() != n) throw ConfigError("rhs length does not match follower count");
    if (!(delta > 0.0)) throw ConfigError("solver tolerance must be positive");

    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    const double rhs_norm = rhs.norm();
    if (rhs_norm == 0.0) return x;

    const auto& lf = sys.matrix();
    const Eigen::VectorXd inv_diag = lf.diagonal().cwiseInverse();
    const double target = delta * rhs_norm;
    const long cap = 10L * n + 200;

    Eigen::VectorXd r = rhs;
    Eigen::VectorXd z = inv_diag.cwiseProduct(r);
    Eigen::VectorXd p = z;
    Eigen::VectorXd q(n);
    double rz = r.dot(z);
    double res = r.norm();
    for (long it = 0; it < cap; ++it) {
        if (res <= target) return x;
        q.noalias() = lf * p;
        const double pq = p.dot(q);
        if (!(pq > 0.0)) break;  // round-off breakdown; residual check decides below
        const double alpha = rz / pq;
        x += alpha * p;
        r -= alpha * q;
        res = r.norm();
        z = inv_diag.cwiseProduct(r);
        const double rz_next = r.dot(z);
        p = z + (rz_next / rz) * p;
        rz = rz_next;
    }
    if (res <= target) return x;
    throw NoConvergence(cap, res / rhs_norm);
}

}  // namespace opinion
