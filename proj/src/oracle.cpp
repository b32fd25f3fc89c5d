#include "rainbow/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <queue>

namespace rainbow {

namespace {

using Clock = std::chrono::steady_clock;

// Flat adjacency with edge indices, for tight search loops.
struct FlatGraph {
    int n = 0;
    int m = 0;
    // per vertex: (neighbor, edge index), ascending by neighbor
    std::vector<std::vector<std::pair<VertexId, int>>> adj;

    explicit FlatGraph(const Graph& g) : n(g.vertex_count()), m(g.edge_count()), adj(n) {
        for (VertexId v = 0; v < n; ++v)
            for (VertexId w : g.neighbors(v)) adj[v].emplace_back(w, *g.edge_index(Edge(v, w)));
    }
};

// Rainbow reachability from `source` where colors[e] in 1..k colors an edge
// and 0 marks a wildcard (uncolored) edge that never consumes a color.
// Returns the set of reached vertices as a bitmask (n capped at 60).
std::uint64_t rainbow_reach(const FlatGraph& fg, const std::vector<int>& colors, VertexId source,
                            std::vector<char>& visited, int k) {
    const std::uint32_t mask_count = std::uint32_t{1} << k;
    visited.assign(static_cast<std::size_t>(fg.n) * mask_count, 0);
    std::uint64_t reached = 0;
    std::vector<std::uint32_t> stack;
    stack.reserve(64);
    auto push = [&](VertexId v, std::uint32_t used) {
        const std::uint32_t state = static_cast<std::uint32_t>(v) * mask_count + used;
        if (!visited[state]) {
            visited[state] = 1;
            stack.push_back(state);
        }
    };
    push(source, 0);
    reached |= std::uint64_t{1} << source;
    while (!stack.empty()) {
        const std::uint32_t state = stack.back();
        stack.pop_back();
        const VertexId v = static_cast<VertexId>(state / mask_count);
        const std::uint32_t used = state % mask_count;
        for (const auto& [w, ei] : fg.adj[v]) {
            const int c = colors[ei];
            if (c == 0) {
                reached |= std::uint64_t{1} << w;
                push(w, used);
            } else {
                const std::uint32_t bit = std::uint32_t{1} << (c - 1);
                if (!(used & bit)) {
                    reached |= std::uint64_t{1} << w;
                    push(w, used | bit);
                }
            }
        }
    }
    return reached;
}

// Bitmask state capacity: (vertex, color-set) states need n <= 60 and
// k <= 20 distinct colors.
constexpr int kMaxVertices = 60;
constexpr int kMaxDistinctColors = 20;

// Colors per edge index, remapped to dense ordinals 1..k in order of first
// appearance (distinctness is all that matters for rainbow paths).
std::vector<int> colors_by_edge_index(const Graph& g, const Coloring& coloring) {
    std::vector<int> colors(g.edge_count(), 0);
    for (const Edge& e : g.edges()) {
        auto c = coloring.color_of(e);
        if (!c)
            fail(Errc::IncompleteColoring,
                 "edge (" + g.label(e.u) + "," + g.label(e.v) + ") has no color");
        if (*c < 1)
            fail(Errc::IncompleteColoring,
                 "edge (" + g.label(e.u) + "," + g.label(e.v) + ") has a non-positive color");
        colors[*g.edge_index(e)] = *c;
    }
    std::map<int, int> dense;
    for (int c : colors) dense.emplace(c, 0);
    int next = 1;
    for (auto& [raw, ordinal] : dense) ordinal = next++;
    for (int& c : colors) c = dense[c];
    return colors;
}

void check_capacity(int n, int k) {
    if (n > kMaxVertices)
        fail(Errc::BudgetExceeded, "rainbow check supports at most " +
                                       std::to_string(kMaxVertices) + " vertices");
    if (k > kMaxDistinctColors)
        fail(Errc::BudgetExceeded, "rainbow check supports at most " +
                                       std::to_string(kMaxDistinctColors) + " distinct colors");
}

} // namespace

std::optional<std::pair<VertexId, VertexId>> first_rainbow_failure(const Graph& g,
                                                                   const Coloring& coloring) {
    const int n = g.vertex_count();
    if (n <= 1) return std::nullopt;
    const auto colors = colors_by_edge_index(g, coloring);
    const int k = *std::max_element(colors.begin(), colors.end());
    if (k == g.edge_count() && g.is_connected()) return std::nullopt; // all edges distinct
    check_capacity(n, k);
    FlatGraph fg(g);
    std::vector<char> visited;
    for (VertexId s = 0; s + 1 < n; ++s) {
        const std::uint64_t reached = rainbow_reach(fg, colors, s, visited, k);
        for (VertexId t = s + 1; t < n; ++t)
            if (!(reached >> t & 1)) return std::make_pair(s, t);
    }
    return std::nullopt;
}

bool is_rainbow_connected(const Graph& g, const Coloring& coloring) {
    return !first_rainbow_failure(g, coloring).has_value();
}

std::optional<std::vector<VertexId>> rainbow_witness(const Graph& g, const Coloring& coloring,
                                                     VertexId u, VertexId v) {
    if (!g.has_vertex(u) || !g.has_vertex(v))
        fail(Errc::UnknownVertex, "witness endpoints must be vertices of the graph");
    if (u == v) return std::vector<VertexId>{u};
    const auto colors = colors_by_edge_index(g, coloring);
    const int k = colors.empty() ? 1 : *std::max_element(colors.begin(), colors.end());
    check_capacity(g.vertex_count(), k);
    const std::uint32_t mask_count = std::uint32_t{1} << k;
    FlatGraph fg(g);

    // BFS over (vertex, used colors); parent chain reconstructs the path.
    const std::uint32_t state_count = static_cast<std::uint32_t>(fg.n) * mask_count;
    std::vector<std::int32_t> parent(state_count, -2); // -2 unvisited, -1 root
    std::queue<std::uint32_t> q;
    const std::uint32_t start = static_cast<std::uint32_t>(u) * mask_count;
    parent[start] = -1;
    q.push(start);
    while (!q.empty()) {
        const std::uint32_t state = q.front();
        q.pop();
        const VertexId at = static_cast<VertexId>(state / mask_count);
        const std::uint32_t used = state % mask_count;
        if (at == v) {
            std::vector<VertexId> path;
            for (std::int32_t s = static_cast<std::int32_t>(state); s != -1; s = parent[s])
                path.push_back(static_cast<VertexId>(static_cast<std::uint32_t>(s) / mask_count));
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (const auto& [w, ei] : fg.adj[at]) {
            const std::uint32_t bit = std::uint32_t{1} << (colors[ei] - 1);
            if (used & bit) continue;
            const std::uint32_t next = static_cast<std::uint32_t>(w) * mask_count + (used | bit);
            if (parent[next] == -2) {
                parent[next] = static_cast<std::int32_t>(state);
                q.push(next);
            }
        }
    }
    return std::nullopt;
}

namespace {

// Depth-first search over canonical colorings of the edges of g for a fixed
// color budget k. Returns the first valid full assignment in search order.
class ColoringSearch {
public:
    ColoringSearch(const Graph& g, int k, std::optional<Clock::time_point> deadline)
        : g_(g), fg_(g), k_(k), deadline_(deadline), colors_(fg_.m, 0) {
        all_vertices_ = fg_.n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << fg_.n) - 1;
    }

    std::optional<Coloring> run() {
        check_deadline();
        if (dfs(0, 0)) {
            Coloring out;
            for (int i = 0; i < fg_.m; ++i) out.assignments[g_.edges()[i]] = colors_[i];
            out.colors_used = out.distinct_colors();
            return out;
        }
        return std::nullopt;
    }

private:
    bool dfs(int edge, int used_count) {
        const int limit = std::min(k_, used_count + 1);
        for (int c = 1; c <= limit; ++c) {
            colors_[edge] = c;
            if (feasible()) {
                if (edge + 1 == fg_.m) return true; // full assignment, exactly checked
                if (dfs(edge + 1, std::max(used_count, c))) return true;
            }
        }
        colors_[edge] = 0;
        return false;
    }

    // Exact prune: false only when some pair is rainbow-disconnected even with
    // every uncolored edge free. On full assignments this is the plain
    // rainbow-connectivity check.
    bool feasible() {
        if (++nodes_ % 4096 == 0) check_deadline();
        // The source that failed last time tends to fail again; test it first.
        if (hint_ >= 0) {
            if (!source_ok(hint_)) return false;
        }
        for (VertexId s = 0; s + 1 < fg_.n; ++s) {
            if (s == hint_) continue;
            if (!source_ok(s)) {
                hint_ = s;
                return false;
            }
        }
        return true;
    }

    bool source_ok(VertexId s) {
        const std::uint64_t reached = rainbow_reach(fg_, colors_, s, visited_, k_);
        return (reached & all_vertices_) == all_vertices_;
    }

    void check_deadline() {
        if (deadline_ && Clock::now() > *deadline_)
            fail(Errc::BudgetExceeded, "time budget exhausted during exact search");
    }

    const Graph& g_;
    FlatGraph fg_;
    int k_;
    std::optional<Clock::time_point> deadline_;
    std::vector<int> colors_;
    std::vector<char> visited_;
    std::uint64_t all_vertices_ = 0;
    VertexId hint_ = -1;
    std::uint64_t nodes_ = 0;
};

} // namespace

RcResult rc_exact(const Graph& g, const SearchBudget& budget) {
    const int m = g.edge_count();
    if (m == 0) fail(Errc::EmptyStream, "graph has no edges");
    if (!g.is_connected()) fail(Errc::Disconnected, "rc is defined for connected graphs only");
    if (m > budget.max_edges)
        fail(Errc::BudgetExceeded,
             "graph has " + std::to_string(m) + " edges, budget allows " +
                 std::to_string(budget.max_edges));

    std::optional<Clock::time_point> deadline;
    if (budget.max_seconds)
        deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(*budget.max_seconds));

    const int lower = std::max(1, g.diameter());
    for (int k = lower; k <= m; ++k) {
        check_capacity(g.vertex_count(), k);
        ColoringSearch search(g, k, deadline);
        if (auto witness = search.run()) {
            assert(is_rainbow_connected(g, *witness));
            assert(witness->colors_used == k);
            return RcResult{k, std::move(*witness)};
        }
    }
    // Unreachable: k = m (all colors distinct) rainbow-connects any connected
    // graph.
    fail(Errc::Internal, "exact search failed to terminate at k = m");
}

std::optional<int> rc_closed_form(const FamilyTag& tag) {
    tag.validate();
    switch (tag.family) {
        case Family::Path: return tag.n - 1;
        case Family::Tree: return tag.n - 1; // m = n - 1 colors, one per edge
        case Family::Star: return tag.n - 1;
        case Family::Cycle:
            if (tag.n < 4) return std::nullopt;
            return (tag.n + 1) / 2;
        case Family::Wheel:
            if (tag.n < 8) return std::nullopt;
            return 3;
        case Family::Complete: return 1;
        case Family::CompleteBipartite:
            if (tag.p < 2 || tag.q < 2) return std::nullopt;
            return 2;
    }
    return std::nullopt;
}

} // namespace rainbow
