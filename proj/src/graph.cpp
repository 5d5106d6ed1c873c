#include "opinion/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "opinion/errors.hpp"
#include "opinion/rng.hpp"

namespace opinion {

namespace {

std::uint64_t pair_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

Graph::Graph(std::vector<std::pair<int, int>> edges, std::vector<NodeId> external)
    : edges_(std::move(edges)), external_(std::move(external)) {
    const int n = static_cast<int>(external_.size());
    if (n == 0 || edges_.empty()) throw EmptyInput();

    internal_.reserve(external_.size());
    for (int u = 0; u < n; ++u) {
        if (!internal_.emplace(external_[static_cast<size_t>(u)], u).second)
            throw DataError("duplicate external id " +
                            std::to_string(external_[static_cast<size_t>(u)]));
    }

    adjacency_.assign(static_cast<size_t>(n), {});
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges_.size() * 2);
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw DataError("edge endpoint out of range");
        if (u == v) throw SelfLoop(external_[static_cast<size_t>(u)]);
        if (u > v) std::swap(u, v);
        if (!seen.insert(pair_key(u, v)).second)
            throw DuplicateEdge(external_[static_cast<size_t>(u)],
                                external_[static_cast<size_t>(v)]);
        adjacency_[static_cast<size_t>(u)].push_back(v);
        adjacency_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

    // connectivity (BFS from node 0)
    std::vector<char> visited(static_cast<size_t>(n), 0);
    std::deque<int> queue{0};
    visited[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : adjacency_[static_cast<size_t>(u)]) {
            if (!visited[static_cast<size_t>(v)]) {
                visited[static_cast<size_t>(v)] = 1;
                ++reached;
                queue.push_back(v);
            }
        }
    }
    if (reached != n) throw DisconnectedGraph();
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adjacency_[static_cast<size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::internal_id(NodeId ext) const {
    const auto it = internal_.find(ext);
    if (it == internal_.end())
        throw DataError("unknown node id " + std::to_string(ext));
    return it->second;
}

Graph Graph::with_edge(int u, int v) const {
    auto edges = edges_;
    edges.emplace_back(std::min(u, v), std::max(u, v));
    return Graph(std::move(edges), external_);
}

void Graph::write_edges(std::ostream& out) const {
    for (const auto& [u, v] : edges_)
        out << external_[static_cast<size_t>(u)] << ' '
            << external_[static_cast<size_t>(v)] << '\n';
}

Graph load_graph(const std::vector<std::pair<NodeId, NodeId>>& edge_list) {
    if (edge_list.empty()) throw EmptyInput();
    std::unordered_map<NodeId, int> remap;
    std::vector<NodeId> external;
    auto intern = [&](NodeId ext) {
        const auto [it, inserted] = remap.emplace(ext, static_cast<int>(external.size()));
        if (inserted) external.push_back(ext);
        return it->second;
    };
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_list.size());
    for (const auto& [a, b] : edge_list) {
        if (a == b) throw SelfLoop(a);
        const int u = intern(a);  // sequenced: a's id must be assigned first
        const int v = intern(b);
        edges.emplace_back(u, v);
    }
    return Graph(std::move(edges), std::move(external));
}

Graph load_graph_stream(std::istream& in) {
    std::vector<std::pair<NodeId, NodeId>> edge_list;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#' || line[start] == '%') continue;
        std::istringstream fields(line);
        NodeId a = 0, b = 0;
        if (!(fields >> a >> b))
            throw ParseError("line " + std::to_string(line_no) + ": expected two node ids");
        std::string extra;
        if (fields >> extra)
            throw ParseError("line " + std::to_string(line_no) + ": trailing tokens");
        if (a < 0 || b < 0)
            throw ParseError("line " + std::to_string(line_no) + ": negative node id");
        edge_list.emplace_back(a, b);
    }
    return load_graph(edge_list);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError(path);
    return load_graph_stream(in);
}

Partition Partition::swapped() const {
    Partition out = *this;
    std::swap(out.s0, out.s1);
    return out;
}

Partition make_partition(const Graph& g, std::vector<int> s0, std::vector<int> s1) {
    const int n = g.node_count();
    for (int u : s0)
        if (u < 0 || u >= n) throw DataError("s0 node out of range");
    for (int u : s1)
        if (u < 0 || u >= n) throw DataError("s1 node out of range");
    std::sort(s0.begin(), s0.end());
    s0.erase(std::unique(s0.begin(), s0.end()), s0.end());
    std::sort(s1.begin(), s1.end());
    s1.erase(std::unique(s1.begin(), s1.end()), s1.end());
    if (s0.empty()) throw EmptyS0();
    if (s1.empty()) throw EmptyS1();

    std::vector<int> role(static_cast<size_t>(n), -1);  // 0 / 1 per leader set
    for (int u : s0) role[static_cast<size_t>(u)] = 0;
    for (int u : s1) {
        if (role[static_cast<size_t>(u)] == 0) throw OverlappingLeaderSets();
        role[static_cast<size_t>(u)] = 1;
    }

    Partition p;
    p.s0 = std::move(s0);
    p.s1 = std::move(s1);
    p.local_of.assign(static_cast<size_t>(n), -1);
    for (int u = 0; u < n; ++u) {
        if (role[static_cast<size_t>(u)] == -1) {
            p.local_of[static_cast<size_t>(u)] = static_cast<int>(p.followers.size());
            p.followers.push_back(u);
        }
    }
    if (p.followers.empty()) throw NoFollowers();
    return p;
}

Partition make_partition_external(const Graph& g, const std::vector<NodeId>& s0,
                                  const std::vector<NodeId>& s1) {
    std::vector<int> a, b;
    a.reserve(s0.size());
    b.reserve(s1.size());
    for (NodeId id : s0) a.push_back(g.internal_id(id));
    for (NodeId id : s1) b.push_back(g.internal_id(id));
    return make_partition(g, std::move(a), std::move(b));
}

Partition random_partition(const Graph& g, int n0, int n1, std::uint64_t seed) {
    const int n = g.node_count();
    if (n0 < 1 || n1 < 1 || n0 + n1 >= n) throw TooManyLeaders(n0, n1, n);
    SplitMix64 rng(derive_seed(seed, /*stream=*/0x1eade5));
    const auto picks = sample_without_replacement(n0 + n1, n, rng);
    std::vector<int> s0(picks.begin(), picks.begin() + n0);
    std::vector<int> s1(picks.begin() + n0, picks.end());
    return make_partition(g, std::move(s0), std::move(s1));
}

CandidateSet build_candidate_set(const Graph& g, const Partition& p,
                                 const Eigen::VectorXd& x_inf, double eta) {
    if (!(eta > 0.0 && eta < 1.0)) throw EtaOutOfRange(eta);
    if (x_inf.size() != p.follower_count())
        throw ConfigError("x_inf length does not match follower count");
    for (Eigen::Index i = 0; i < x_inf.size(); ++i)
        if (!(x_inf[i] >= 0.0 && x_inf[i] <= 1.0)) throw InvalidOpinion(x_inf[i]);

    std::vector<char> in_s1(static_cast<size_t>(g.node_count()), 0);
    for (int a : p.s1) in_s1[static_cast<size_t>(a)] = 1;

    CandidateSet q;
    q.eta = eta;
    for (int j = 0; j < p.follower_count(); ++j) {
        const int i = p.followers[static_cast<size_t>(j)];
        if (x_inf[j] >= eta) continue;
        bool touches_s1 = false;
        for (int v : g.neighbors(i)) {
            if (in_s1[static_cast<size_t>(v)]) {
                touches_s1 = true;
                break;
            }
        }
        if (touches_s1) continue;
        for (int a : p.s1) q.edges.push_back({a, i});
    }
    return q;
}

}  // namespace opinion
