// graph.hpp — simple undirected connected graphs over dense vertex indices.
//
// Vertices come into existence through edges: indices are assigned 0..n-1 in
// order of first appearance of their external label, so a graph never holds an
// isolated vertex. Edges are stored canonically (smaller index first) and keep
// their insertion order, which downstream code uses as the edge-index order.
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

using VertexId = int;

// Canonical unordered pair of vertex indices (u < v after normalization).
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

class Graph {
public:
    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Adds the edge (u,v), allocating dense indices for labels seen for the
    // first time. Throws SelfLoop / DuplicateEdge.
    Edge add_edge(std::string_view u_label, std::string_view v_label);

    std::optional<VertexId> find_vertex(std::string_view label) const;
    const std::string& label(VertexId v) const; // UnknownVertex if out of range

    bool has_vertex(VertexId v) const { return v >= 0 && v < vertex_count(); }
    bool has_edge(Edge e) const { return edge_index_.count(e) > 0; }

    // Neighbor set of v, ascending by index.
    const std::set<VertexId>& neighbors(VertexId v) const;

    int degree(VertexId v) const; // UnknownVertex

    // Number of edges of the graph sharing an endpoint with (u,v), excluding
    // that edge itself. The edge may or may not be present; at most one of its
    // endpoints may be a label the graph has not seen (an unseen endpoint has
    // no incident edges). Both endpoints unknown -> UnknownVertex.
    int adjacent_edge_count(std::string_view u_label, std::string_view v_label) const;
    int adjacent_edge_count(Edge e) const; // both endpoints must be valid indices

    // True iff every vertex is reachable from vertex 0. Graphs with zero or
    // one edge are connected by convention.
    bool is_connected() const;

    // Max over all vertex pairs of the shortest-path edge count, by BFS from
    // every source. Requires a connected graph with n >= 2, else Disconnected.
    int diameter() const;

    // Edges in insertion order.
    const std::vector<Edge>& edges() const { return edges_; }
    std::optional<int> edge_index(Edge e) const;

private:
    VertexId intern(std::string_view label);

    std::vector<std::string> labels_;                  // index -> label
    std::unordered_map<std::string, VertexId> index_;  // label -> index
    std::vector<std::set<VertexId>> adj_;
    std::vector<Edge> edges_;
    std::map<Edge, int> edge_index_;
};

} // namespace rainbow
