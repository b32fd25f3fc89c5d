#include "rainbow/graph.hpp"

#include <algorithm>
#include <queue>

namespace rainbow {

VertexId Graph::intern(std::string_view label) {
    auto it = index_.find(std::string(label));
    if (it != index_.end()) return it->second;
    VertexId id = static_cast<VertexId>(labels_.size());
    labels_.emplace_back(label);
    index_.emplace(labels_.back(), id);
    adj_.emplace_back();
    return id;
}

Edge Graph::add_edge(std::string_view u_label, std::string_view v_label) {
    if (u_label == v_label)
        fail(Errc::SelfLoop, "self-loop edge (" + std::string(u_label) + "," + std::string(v_label) + ")");
    VertexId u = intern(u_label);
    VertexId v = intern(v_label);
    Edge e(u, v);
    if (has_edge(e))
        fail(Errc::DuplicateEdge, "duplicate edge (" + std::string(u_label) + "," + std::string(v_label) + ")");
    adj_[u].insert(v);
    adj_[v].insert(u);
    edge_index_.emplace(e, static_cast<int>(edges_.size()));
    edges_.push_back(e);
    return e;
}

std::optional<VertexId> Graph::find_vertex(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const std::string& Graph::label(VertexId v) const {
    if (!has_vertex(v)) fail(Errc::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
    return labels_[v];
}

const std::set<VertexId>& Graph::neighbors(VertexId v) const {
    if (!has_vertex(v)) fail(Errc::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
    return adj_[v];
}

int Graph::degree(VertexId v) const {
    if (!has_vertex(v)) fail(Errc::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
    return static_cast<int>(adj_[v].size());
}

int Graph::adjacent_edge_count(Edge e) const {
    if (!has_vertex(e.u) || !has_vertex(e.v))
        fail(Errc::UnknownVertex, "edge endpoint out of range");
    int count = 0;
    for (const Edge& f : edges_) {
        if (f == e) continue;
        if (f.u == e.u || f.v == e.u || f.u == e.v || f.v == e.v) ++count;
    }
    return count;
}

int Graph::adjacent_edge_count(std::string_view u_label, std::string_view v_label) const {
    auto u = find_vertex(u_label);
    auto v = find_vertex(v_label);
    if (!u && !v)
        fail(Errc::UnknownVertex,
             "neither endpoint known: (" + std::string(u_label) + "," + std::string(v_label) + ")");
    if (u && v) return adjacent_edge_count(Edge(*u, *v));
    // The unseen endpoint has no incident edges; count those at the known one.
    return degree(u ? *u : *v);
}

bool Graph::is_connected() const {
    const int n = vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

int Graph::diameter() const {
    const int n = vertex_count();
    if (n < 2 || !is_connected())
        fail(Errc::Disconnected, "diameter requires a connected graph on >= 2 vertices");
    int best = 0;
    std::vector<int> dist(n);
    for (VertexId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<VertexId> q;
        q.push(s);
        dist[s] = 0;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId w : adj_[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
            }
        }
        best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    }
    return best;
}

std::optional<int> Graph::edge_index(Edge e) const {
    auto it = edge_index_.find(e);
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

} // namespace rainbow
