#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <utility>

#include "opinion/follower_system.hpp"
#include "opinion/solver.hpp"

namespace opinion {

/// Pair of random +-1/sqrt(t) projection matrices: px (t x m_bar) hits the
/// follower-subgraph incidence matrix, py (t x nf) hits W^{1/2}. Rows are
/// generated on demand from (seed, row), so construction is O(1) and row
/// streams are independent of evaluation order.
struct SketchPair {
    int t = 0;
    int m_bar = 0;
    int nf = 0;
    std::uint64_t seed = 0;

    double entry_magnitude() const;    // 1/sqrt(t)
    void px_row(int r, Eigen::VectorXd& out) const;
    void py_row(int r, Eigen::VectorXd& out) const;
    Eigen::MatrixXd px() const;        // materialized; small sketches only
    Eigen::MatrixXd py() const;

    // Row r of px * Bbar resp. py * W^{1/2}, without materializing px/py.
    void xbar_row(const FollowerSystem& sys, int r, Eigen::VectorXd& out) const;
    void ybar_row(const FollowerSystem& sys, int r, Eigen::VectorXd& out) const;
};

/// Projection dimension. paper_strict evaluates ceil(24 ln(nf) / (eps/12)^2).
/// practical sizes t so one norm estimate lands within (1 +- eps) with
/// probability >= 95% (Achlioptas tail bound), independent of nf.
int sketch_dimension(int nf, double eps, ToleranceMode mode);

SketchPair make_sketch(const FollowerSystem& sys, double eps, std::uint64_t seed,
                       ToleranceMode mode = ToleranceMode::practical);

/// Solves the 2t sketched systems: row r of the first result approximates
/// row r of px * Bbar * L_F^{-1}, row r of the second approximates row r of
/// py * W^{1/2} * L_F^{-1}. Row solves are independent and parallel-safe.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> sketched_rows(const FollowerSystem& sys,
                                                          const SketchPair& sk,
                                                          double delta3, int threads = 1);

/// Column norms |X~ e_j|^2 + |Y~ e_j|^2 without storing the row matrices;
/// estimates (L_F^{-1})_jj. Accumulation order is fixed by (t, chunking), so
/// results are bitwise independent of the thread count.
Eigen::VectorXd sketched_column_norms(const FollowerSystem& sys, const SketchPair& sk,
                                      double delta3, int threads = 1);

}  // namespace opinion
