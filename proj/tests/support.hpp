// support.hpp — independent reference implementations for tests. Everything
// here goes through the public Graph surface only and stays deliberately
// naive: simple-path enumeration instead of bitmask state search, full k^m
// odometers instead of pruned DFS.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"

namespace support {

using namespace rainbow;

using LabelEdges = std::vector<std::pair<std::string, std::string>>;

inline Graph graph_of(const LabelEdges& edges) {
    Graph g;
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline EdgeStream stream_of(const LabelEdges& edges) {
    EdgeStream s;
    s.edges = edges;
    s.provenance.source = "test";
    return s;
}

// Some simple path from u to v whose edge colors are pairwise distinct?
// Exhaustive depth-first enumeration of simple paths.
inline bool rainbow_path_bruteforce(const Graph& g, const Coloring& c, VertexId u, VertexId v) {
    std::vector<char> on_path(g.vertex_count(), 0);
    std::vector<int> used;
    bool found = false;
    auto dfs = [&](auto&& self, VertexId at) -> void {
        if (found) return;
        if (at == v) {
            found = true;
            return;
        }
        for (VertexId w : g.neighbors(at)) {
            if (on_path[w]) continue;
            const int color = *c.color_of(Edge(at, w));
            if (std::find(used.begin(), used.end(), color) != used.end()) continue;
            on_path[w] = 1;
            used.push_back(color);
            self(self, w);
            on_path[w] = 0;
            used.pop_back();
            if (found) return;
        }
    };
    on_path[u] = 1;
    dfs(dfs, u);
    return found;
}

inline bool rainbow_connected_bruteforce(const Graph& g, const Coloring& c) {
    for (VertexId a = 0; a < g.vertex_count(); ++a)
        for (VertexId b = a + 1; b < g.vertex_count(); ++b)
            if (!rainbow_path_bruteforce(g, c, a, b)) return false;
    return true;
}

// Minimum k for which some assignment out of all k^m colorings works; no
// pruning, no symmetry breaking. Usable up to m ~ 8.
inline int naive_rc(const Graph& g) {
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    for (int k = 1; k <= m; ++k) {
        std::vector<int> assign(m, 1);
        for (;;) {
            Coloring c;
            for (int i = 0; i < m; ++i) c.assignments[edges[i]] = assign[i];
            c.colors_used = c.distinct_colors();
            if (rainbow_connected_bruteforce(g, c)) return k;
            int i = 0;
            while (i < m && ++assign[i] > k) {
                assign[i] = 1;
                ++i;
            }
            if (i == m) break;
        }
    }
    return m; // all-distinct always works on a connected graph
}

// Random connected graph: seeded random tree plus `extra` random non-edges
// (capped by availability). Labels "1".."n".
inline Graph make_random_connected(int n, int extra, std::uint32_t seed) {
    Graph g = make_random_tree(n, seed);
    std::vector<std::pair<int, int>> non_edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto u = g.find_vertex(std::to_string(i));
            auto v = g.find_vertex(std::to_string(j));
            if (!g.has_edge(Edge(*u, *v))) non_edges.emplace_back(i, j);
        }
    std::mt19937 rng(seed ^ 0x9e3779b9u);
    for (int t = 0; t < extra && !non_edges.empty(); ++t) {
        const auto pick = uniform_below(rng, static_cast<std::uint32_t>(non_edges.size()));
        const auto [i, j] = non_edges[pick];
        g.add_edge(std::to_string(i), std::to_string(j));
        non_edges.erase(non_edges.begin() + pick);
    }
    return g;
}

} // namespace support
