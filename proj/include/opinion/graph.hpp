#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace opinion {

using NodeId = std::int64_t;  // external node id, as found in input files

/// Connected, simple, undirected graph over dense internal indices [0, n).
/// External ids are remapped on load in first-appearance order and kept for
/// output. Immutable after construction.
class Graph {
public:
    // `edges` holds internal index pairs; `external` maps internal -> external.
    Graph(std::vector<std::pair<int, int>> edges, std::vector<NodeId> external);

    int node_count() const { return static_cast<int>(external_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& neighbors(int u) const { return adjacency_[static_cast<size_t>(u)]; }
    int degree(int u) const { return static_cast<int>(adjacency_[static_cast<size_t>(u)].size()); }
    bool has_edge(int u, int v) const;

    // Canonical edge list: (min, max) pairs in input order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    NodeId external_id(int u) const { return external_[static_cast<size_t>(u)]; }
    int internal_id(NodeId ext) const;  // throws DataError when unknown

    // Copy of this graph with one extra edge (u, v); the pair must not exist.
    Graph with_edge(int u, int v) const;

    void write_edges(std::ostream& out) const;

private:
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<NodeId> external_;
    std::unordered_map<NodeId, int> internal_;
};

Graph load_graph(const std::vector<std::pair<NodeId, NodeId>>& edge_list);
Graph load_graph_stream(std::istream& in);
Graph load_graph_file(const std::string& path);

/// Node roles: 0-leaders, 1-leaders, followers. Followers are ordered by
/// ascending global index and carry a bijective local index map.
struct Partition {
    std::vector<int> s0;
    std::vector<int> s1;
    std::vector<int> followers;
    std::vector<int> local_of;  // global -> follower local index, -1 for leaders

    int follower_count() const { return static_cast<int>(followers.size()); }
    bool is_follower(int u) const { return local_of[static_cast<size_t>(u)] >= 0; }

    Partition swapped() const;  // roles of s0 and s1 exchanged
};

Partition make_partition(const Graph& g, std::vector<int> s0, std::vector<int> s1);
Partition make_partition_external(const Graph& g, const std::vector<NodeId>& s0,
                                  const std::vector<NodeId>& s1);
Partition random_partition(const Graph& g, int n0, int n1, std::uint64_t seed);

struct CandidateEdge {
    int leader;    // node in s1
    int follower;  // node in F
    bool operator==(const CandidateEdge&) const = default;
};

struct CandidateSet {
    std::vector<CandidateEdge> edges;
    double eta = 0.0;
};

/// Admissible new edges: every (a, i) with a in s1 and i a follower that is
/// adjacent to no 1-leader and has equilibrium opinion x_inf[i] < eta.
/// Ordered by (follower local index, leader index).
CandidateSet build_candidate_set(const Graph& g, const Partition& p,
                                 const Eigen::VectorXd& x_inf, double eta);

}  // namespace opinion
