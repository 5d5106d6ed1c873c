#pragma once

#include <Eigen/Core>

#include "opinion/follower_system.hpp"

namespace opinion {

enum class ToleranceMode { paper_strict, practical };

/// Solver tolerances for the three linear-system roles in gain estimation:
/// delta1 for L_F x = 1, delta2 for L_F x = b, delta3 for the sketch rows.
struct SolveTolerances {
    double delta1;
    double delta2;
    double delta3;
    ToleranceMode mode;
};

inline constexpr double kDeltaFloor = 1e-10;

/// paper_strict evaluates the closed-form schedules verbatim; practical
/// floors each delta at kDeltaFloor (the schedules shrink as eps/n^4 and
/// drop below machine precision for n beyond a few hundred).
SolveTolerances solve_tolerances(int n, double eps, double eta, ToleranceMode mode);

/// Jacobi-preconditioned conjugate gradient on L_F x = rhs. Stops when the
/// relative residual |L_F x - rhs| / |rhs| drops below delta; iteration cap
/// 10 * nf + 200. Throws NoConvergence at the cap.
Eigen::VectorXd sdd_solve(const FollowerSystem& sys, const Eigen::VectorXd& rhs,
                          double delta);

}  // namespace opinion
