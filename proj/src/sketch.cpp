#include "opinion/sketch.hpp"

#include <cmath>
#include <vector>

#include "opinion/errors.hpp"
#include "opinion/parallel.hpp"
#include "opinion/rng.hpp"

namespace opinion {

namespace {

constexpr std::uint64_t kPxStream = 0x5b;
constexpr std::uint64_t kPyStream = 0x59;
constexpr int kRowChunk = 16;

// Streams +-magnitude signs for one sketch row, 64 per generator word.
class SignStream {
public:
    SignStream(std::uint64_t seed, double magnitude)
        : rng_(seed), magnitude_(magnitude) {}

    double next() {
        if (left_ == 0) {
            bits_ = rng_.next();
            left_ = 64;
        }
        const double s = (bits_ & 1u) ? magnitude_ : -magnitude_;
        bits_ >>= 1;
        --left_;
        return s;
    }

private:
    SplitMix64 rng_;
    double magnitude_;
    std::uint64_t bits_ = 0;
    int left_ = 0;
};

}  // namespace

double SketchPair::entry_magnitude() const {
    return 1.0 / std::sqrt(static_cast<double>(t));
}

void SketchPair::px_row(int r, Eigen::VectorXd& out) const {
    out.resize(m_bar);
    SignStream signs(derive_seed(seed, kPxStream, static_cast<std::uint64_t>(r)),
                     entry_magnitude());
    for (int i = 0; i < m_bar; ++i) out[i] = signs.next();
}

void SketchPair::py_row(int r, Eigen::VectorXd& out) const {
    out.resize(nf);
    SignStream signs(derive_seed(seed, kPyStream, static_cast<std::uint64_t>(r)),
                     entry_magnitude());
    for (int i = 0; i < nf; ++i) out[i] = signs.next();
}

Eigen::MatrixXd SketchPair::px() const {
    Eigen::MatrixXd out(t, m_bar);
    Eigen::VectorXd row;
    for (int r = 0; r < t; ++r) {
        px_row(r, row);
        out.row(r) = row;
    }
    return out;
}

Eigen::MatrixXd SketchPair::py() const {
    Eigen::MatrixXd out(t, nf);
    Eigen::VectorXd row;
    for (int r = 0; r < t; ++r) {
        py_row(r, row);
        out.row(r) = row;
    }
    return out;
}

void SketchPair::xbar_row(const FollowerSystem& sys, int r, Eigen::VectorXd& out) const {
    out.setZero(nf);
    SignStream signs(derive_seed(seed, kPxStream, static_cast<std::uint64_t>(r)),
                     entry_magnitude());
    // incidence convention: +1 at the smaller endpoint, -1 at the larger
    for (const auto& [u, v] : sys.bar_edges()) {
        const double s = signs.next();
        out[u] += s;
        out[v] -= s;
    }
}

void SketchPair::ybar_row(const FollowerSystem& sys, int r, Eigen::VectorXd& out) const {
    out.resize(nf);
    SignStream signs(derive_seed(seed, kPyStream, static_cast<std::uint64_t>(r)),
                     entry_magnitude());
    const auto& w = sys.w_diag();
    for (int i = 0; i < nf; ++i) out[i] = signs.next() * std::sqrt(w[i]);
}

int sketch_dimension(int nf, double eps, ToleranceMode mode) {
    if (!(eps > 0.0 && eps < 0.5)) throw EpsOutOfRange(eps);
    double t;
    if (mode == ToleranceMode::paper_strict) {
        const double d = static_cast<double>(std::max(nf, 2));
        t = std::ceil(24.0 * std::log(d) / ((eps / 12.0) * (eps / 12.0)));
    } else {
        t = std::ceil(std::log(40.0) / (eps * eps / 4.0 - eps * eps * eps / 6.0));
    }
    return std::max(1, static_cast<int>(t));
}

SketchPair make_sketch(const FollowerSystem& sys, double eps, std::uint64_t seed,
                       ToleranceMode mode) {
    SketchPair sk;
    sk.t = sketch_dimension(sys.nf(), eps, mode);
    sk.m_bar = static_cast<int>(sys.bar_edges().size());
    sk.nf = sys.nf();
    sk.seed = seed;
    return sk;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> sketched_rows(const FollowerSystem& sys,
                                                          const SketchPair& sk,
                                                          double delta3, int threads) {
    Eigen::MatrixXd xs(sk.t, sk.nf);
    Eigen::MatrixXd ys(sk.t, sk.nf);
    for_each_chunk(sk.t, kRowChunk, resolve_threads(threads), [&](int, int begin, int end) {
        Eigen::VectorXd rhs;
        for (int r = begin; r < end; ++r) {
            sk.xbar_row(sys, r, rhs);
            xs.row(r) = sdd_solve(sys, rhs, delta3);
            sk.ybar_row(sys, r, rhs);
            ys.row(r) = sdd_solve(sys, rhs, delta3);
        }
    });
    return {std::move(xs), std::move(ys)};
}

Eigen::VectorXd sketched_column_norms(const FollowerSystem& sys, const SketchPair& sk,
                                      double delta3, int threads) {
    const int n_chunks = (sk.t + kRowChunk - 1) / kRowChunk;
    std::vector<Eigen::VectorXd> partial(static_cast<size_t>(n_chunks));
    for_each_chunk(sk.t, kRowChunk, resolve_threads(threads), [&](int c, int begin, int end) {
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(sk.nf);
        Eigen::VectorXd rhs;
        for (int r = begin; r < end; ++r) {
            sk.xbar_row(sys, r, rhs);
            acc.array() += sdd_solve(sys, rhs, delta3).array().square();
            sk.ybar_row(sys, r, rhs);
            acc.array() += sdd_solve(sys, rhs, delta3).array().square();
        }
        partial[static_cast<size_t>(c)] = std::move(acc);
    });
    Eigen::VectorXd norms = Eigen::VectorXd::Zero(sk.nf);
    for (const auto& acc : partial) norms += acc;
    return norms;
}

}  // namespace opinion
