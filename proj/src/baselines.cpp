#include "opinion/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <numeric>
#include <vector>

#include "opinion/equilibrium.hpp"
#include "opinion/errors.hpp"
#include "opinion/rng.hpp"

namespace opinion {

namespace {

Eigen::VectorXd degree_centrality(const Graph& g) {
    Eigen::VectorXd c(g.node_count());
    for (int u = 0; u < g.node_count(); ++u) c[u] = static_cast<double>(g.degree(u));
    return c;
}

Eigen::VectorXd closeness_centrality(const Graph& g) {
    const int n = g.node_count();
    Eigen::VectorXd c(n);
    std::vector<int> dist(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue{s};
        dist[static_cast<size_t>(s)] = 0;
        long long total = 0;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            total += dist[static_cast<size_t>(u)];
            for (int v : g.neighbors(u)) {
                if (dist[static_cast<size_t>(v)] < 0) {
                    dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                    queue.push_back(v);
                }
            }
        }
        c[s] = static_cast<double>(n - 1) / static_cast<double>(total);
    }
    return c;
}

// Brandes (2001) for unweighted graphs; unordered pairs, endpoints excluded.
Eigen::VectorXd betweenness_centrality(const Graph& g) {
    const int n = g.node_count();
    Eigen::VectorXd bc = Eigen::VectorXd::Zero(n);
    std::vector<int> dist(static_cast<size_t>(n));
    std::vector<double> sigma(static_cast<size_t>(n));
    std::vector<double> delta(static_cast<size_t>(n));
    std::vector<std::vector<int>> pred(static_cast<size_t>(n));
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));

    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& pr : pred) pr.clear();
        order.clear();

        std::deque<int> queue{s};
        dist[static_cast<size_t>(s)] = 0;
        sigma[static_cast<size_t>(s)] = 1.0;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            order.push_back(u);
            for (int v : g.neighbors(u)) {
                if (dist[static_cast<size_t>(v)] < 0) {
                    dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                    queue.push_back(v);
                }
                if (dist[static_cast<size_t>(v)] == dist[static_cast<size_t>(u)] + 1) {
                    sigma[static_cast<size_t>(v)] += sigma[static_cast<size_t>(u)];
                    pred[static_cast<size_t>(v)].push_back(u);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const int w = *it;
            for (int u : pred[static_cast<size_t>(w)])
                delta[static_cast<size_t>(u)] += sigma[static_cast<size_t>(u)] /
                                                 sigma[static_cast<size_t>(w)] *
                                                 (1.0 + delta[static_cast<size_t>(w)]);
            if (w != s) bc[w] += delta[static_cast<size_t>(w)];
        }
    }
    return bc / 2.0;
}

Eigen::VectorXd pagerank_centrality(const Graph& g, const PageRankOptions& opt) {
    const int n = g.node_count();
    Eigen::VectorXd pr = Eigen::VectorXd::Constant(n, 1.0 / n);
    Eigen::VectorXd next(n);
    const double teleport = (1.0 - opt.damping) / n;
    for (long it = 0; it < opt.max_iters; ++it) {
        for (int u = 0; u < n; ++u) {
            double sum = 0.0;
            for (int v : g.neighbors(u)) sum += pr[v] / g.degree(v);
            next[u] = teleport + opt.damping * sum;
        }
        const double change = (next - pr).cwiseAbs().maxCoeff();
        pr.swap(next);
        if (change < opt.tol) return pr;
    }
    throw NoConvergence(opt.max_iters, 0.0);
}

}  // namespace

Eigen::VectorXd centrality(const Graph& g, CentralityKind kind, const PageRankOptions& pr) {
    switch (kind) {
        case CentralityKind::degree: return degree_centrality(g);
        case CentralityKind::closeness: return closeness_centrality(g);
        case CentralityKind::betweenness: return betweenness_centrality(g);
        case CentralityKind::pagerank: return pagerank_centrality(g, pr);
    }
    throw ConfigError("unknown centrality kind");
}

SelectionResult select_baseline(const Graph& g, const Partition& p, const CandidateSet& q,
                                int k, BaselineKind kind, std::uint64_t seed) {
    if (k < 1) throw ConfigError("k must be at least 1");
    using clock = std::chrono::steady_clock;
    const auto started = clock::now();

    const int q_size = static_cast<int>(q.edges.size());
    const int rounds = std::min(k, q_size);

    std::vector<int> picked_order;
    std::string tag;
    if (kind == BaselineKind::random) {
        tag = "random";
        SplitMix64 rng(derive_seed(seed, /*stream=*/0xba5e));
        picked_order = sample_without_replacement(rounds, q_size, rng);
    } else {
        CentralityKind ck{};
        switch (kind) {
            case BaselineKind::top_degree: ck = CentralityKind::degree; tag = "top-degree"; break;
            case BaselineKind::top_pagerank: ck = CentralityKind::pagerank; tag = "top-pagerank"; break;
            case BaselineKind::top_closeness: ck = CentralityKind::closeness; tag = "top-closeness"; break;
            case BaselineKind::top_betweenness: ck = CentralityKind::betweenness; tag = "top-betweenness"; break;
            default: throw ConfigError("unknown baseline kind");
        }
        const Eigen::VectorXd score = centrality(g, ck);
        std::vector<int> idx(static_cast<size_t>(q_size));
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
            return score[q.edges[static_cast<size_t>(a)].follower] >
                   score[q.edges[static_cast<size_t>(b)].follower];
        });
        idx.resize(static_cast<size_t>(rounds));
        picked_order = std::move(idx);
    }

    SelectionResult result;
    result.algorithm_tag = tag;
    result.truncated = k > q_size;

    const FollowerSystem sys = build_follower_system(g, p);
    result.h_trace.push_back(objective_after(sys, {}));
    for (int r = 0; r < rounds; ++r) {
        result.chosen.push_back(q.edges[static_cast<size_t>(picked_order[static_cast<size_t>(r)])]);
        const double h = objective_after(sys, result.chosen);
        result.gains.push_back(h - result.h_trace.back());
        result.h_trace.push_back(h);
        result.elapsed_ms.push_back(
            std::chrono::duration<double, std::milli>(clock::now() - started).count() /
            static_cast<double>(rounds));
    }
    return result;
}

namespace {

long double binomial_ld(int n, int k) {
    long double c = 1.0L;
    for (int i = 1; i <= k; ++i) c = c * static_cast<long double>(n - k + i) / i;
    return c;
}

}  // namespace

SelectionResult select_oracle(const Graph& g, const Partition& p, const CandidateSet& q,
                              int k, long cap) {
    if (k < 1) throw ConfigError("k must be at least 1");
    using clock = std::chrono::steady_clock;
    const auto started = clock::now();

    const int q_size = static_cast<int>(q.edges.size());
    const int kk = std::min(k, q_size);
    if (binomial_ld(q_size, kk) > static_cast<long double>(cap))
        throw CombinatorialBlowup(q_size, kk, cap);

    const FollowerSystem sys = build_follower_system(g, p);

    std::vector<int> comb(static_cast<size_t>(kk));
    std::iota(comb.begin(), comb.end(), 0);
    std::vector<int> best_comb;
    double best_h = -1.0;
    std::vector<CandidateEdge> subset(static_cast<size_t>(kk));
    for (;;) {
        for (int i = 0; i < kk; ++i)
            subset[static_cast<size_t>(i)] = q.edges[static_cast<size_t>(comb[static_cast<size_t>(i)])];
        const double h = objective_after(sys, subset);
        if (h > best_h) {
            best_h = h;
            best_comb = comb;
        }
        // next combination in lexicographic order
        int pos = kk - 1;
        while (pos >= 0 && comb[static_cast<size_t>(pos)] == q_size - kk + pos) --pos;
        if (pos < 0) break;
        ++comb[static_cast<size_t>(pos)];
        for (int i = pos + 1; i < kk; ++i)
            comb[static_cast<size_t>(i)] = comb[static_cast<size_t>(i - 1)] + 1;
    }

    SelectionResult result;
    result.algorithm_tag = "oracle";
    result.truncated = k > q_size;
    result.h_trace.push_back(objective_after(sys, {}));
    for (int i = 0; i < kk; ++i) {
        result.chosen.push_back(q.edges[static_cast<size_t>(best_comb[static_cast<size_t>(i)])]);
        const double h = objective_after(sys, result.chosen);
        result.gains.push_back(h - result.h_trace.back());
        result.h_trace.push_back(h);
        result.elapsed_ms.push_back(
            std::chrono::duration<double, std::milli>(clock::now() - started).count() /
            static_cast<double>(kk));
    }
    return result;
}

}  // namespace opinion
