#include "rainbow/generators.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace rainbow {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Path: return "path";
        case Family::Tree: return "tree";
        case Family::Star: return "star";
        case Family::Cycle: return "cycle";
        case Family::Wheel: return "wheel";
        case Family::Complete: return "complete";
        case Family::CompleteBipartite: return "complete_bipartite";
    }
    return "path";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::Path, Family::Tree, Family::Star, Family::Cycle, Family::Wheel,
                     Family::Complete, Family::CompleteBipartite}) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

std::string_view order_name(OrderStrategy o) {
    switch (o) {
        case OrderStrategy::Adversarial: return "adversarial";
        case OrderStrategy::Random: return "random";
        case OrderStrategy::Natural: return "natural";
    }
    return "adversarial";
}

std::optional<OrderStrategy> order_from_name(std::string_view name) {
    for (OrderStrategy o : {OrderStrategy::Adversarial, OrderStrategy::Random, OrderStrategy::Natural}) {
        if (order_name(o) == name) return o;
    }
    return std::nullopt;
}

void FamilyTag::validate() const {
    auto bad = [&](const std::string& why) {
        fail(Errc::BadParameters, std::string(family_name(family)) + ": " + why);
    };
    switch (family) {
        case Family::Path:
            if (n < 2) bad("n must be >= 2");
            break;
        case Family::Tree:
            if (n < 2) bad("n must be >= 2");
            break;
        case Family::Star:
            if (n < 3) bad("n must be >= 3");
            break;
        case Family::Cycle:
            if (n < 3) bad("n must be >= 3");
            break;
        case Family::Wheel:
            if (n < 4) bad("n must be >= 4");
            break;
        case Family::Complete:
            if (n < 2) bad("n must be >= 2");
            break;
        case Family::CompleteBipartite:
            if (p < 1 || q < 1) bad("p and q must be >= 1");
            if (n != p + q) bad("n must equal p + q");
            break;
    }
}

std::string FamilyTag::params_string() const {
    if (family == Family::CompleteBipartite)
        return "p=" + std::to_string(p) + ";q=" + std::to_string(q);
    return "n=" + std::to_string(n);
}

namespace {

std::string lab(int i) { return std::to_string(i); }

using LabelEdge = std::pair<std::string, std::string>;

// Family edge lists in their construction order. Vertex labels are 1..n and
// first appearance follows the label order for every family.
std::vector<LabelEdge> family_edges(const FamilyTag& tag) {
    tag.validate();
    std::vector<LabelEdge> edges;
    const int n = tag.n;
    switch (tag.family) {
        case Family::Path:
            for (int i = 1; i < n; ++i) edges.emplace_back(lab(i), lab(i + 1));
            break;
        case Family::Star:
            for (int i = 2; i <= n; ++i) edges.emplace_back(lab(1), lab(i));
            break;
        case Family::Cycle:
            for (int i = 1; i < n; ++i) edges.emplace_back(lab(i), lab(i + 1));
            edges.emplace_back(lab(n), lab(1));
            break;
        case Family::Wheel:
            // Hub 1, rim 2..n as a cycle on n-1 vertices.
            for (int i = 2; i <= n; ++i) edges.emplace_back(lab(1), lab(i));
            for (int i = 2; i < n; ++i) edges.emplace_back(lab(i), lab(i + 1));
            edges.emplace_back(lab(n), lab(2));
            break;
        case Family::Complete:
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) edges.emplace_back(lab(i), lab(j));
            break;
        case Family::CompleteBipartite:
            // Left part 1..p, right part p+1..p+q.
            for (int i = 1; i <= tag.p; ++i)
                for (int j = tag.p + 1; j <= tag.p + tag.q; ++j) edges.emplace_back(lab(i), lab(j));
            break;
        case Family::Tree:
            fail(Errc::BadParameters, "tree has no canonical shape; use make_random_tree");
    }
    return edges;
}

Graph graph_from_edges(const std::vector<LabelEdge>& edges) {
    Graph g;
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

} // namespace

Graph make_graph(const FamilyTag& tag) { return graph_from_edges(family_edges(tag)); }

std::uint32_t uniform_below(std::mt19937& rng, std::uint32_t bound) {
    if (bound == 0) fail(Errc::Internal, "uniform_below: zero bound");
    const std::uint64_t span = (std::uint64_t{1} << 32) / bound * bound;
    for (;;) {
        std::uint32_t r = rng();
        if (r < span) return r % bound;
    }
}

namespace {

// Attachment parents of a random tree: parent[i] is the vertex (1-based label
// value) that vertex i+2 attaches to.
std::vector<int> random_tree_parents(int n, std::uint32_t seed) {
    if (n < 2) fail(Errc::BadParameters, "tree: n must be >= 2");
    std::mt19937 rng(seed);
    std::vector<int> parents;
    parents.reserve(n - 1);
    for (int i = 2; i <= n; ++i)
        parents.push_back(1 + static_cast<int>(uniform_below(rng, static_cast<std::uint32_t>(i - 1))));
    return parents;
}

std::vector<LabelEdge> random_tree_edges(int n, std::uint32_t seed) {
    std::vector<LabelEdge> edges;
    const auto parents = random_tree_parents(n, seed);
    for (int i = 2; i <= n; ++i) edges.emplace_back(lab(parents[i - 2]), lab(i));
    return edges;
}

} // namespace

Graph make_random_tree(int n, std::uint32_t seed) {
    return graph_from_edges(random_tree_edges(n, seed));
}

namespace {

EdgeStream stream_of(std::vector<LabelEdge> edges, const FamilyTag& tag, OrderStrategy order,
                     std::optional<std::uint32_t> seed) {
    EdgeStream s;
    s.edges = std::move(edges);
    s.provenance.family = tag;
    s.provenance.order = order;
    s.provenance.seed = seed;
    s.provenance.source = "family";
    return s;
}

// Depth-first discovery order of a tree's edges starting from label "1":
// edge (v,w) is emitted at the moment the walk first steps to w, neighbors
// taken in ascending index order.
std::vector<LabelEdge> dfs_discovery_edges(const Graph& g) {
    std::vector<LabelEdge> out;
    auto root = g.find_vertex("1");
    if (!root) fail(Errc::Internal, "tree is missing vertex 1");
    std::vector<char> seen(g.vertex_count(), 0);
    seen[*root] = 1;
    auto walk = [&](auto&& self, VertexId v) -> void {
        for (VertexId w : g.neighbors(v)) {
            if (seen[w]) continue;
            seen[w] = 1;
            out.emplace_back(g.label(v), g.label(w));
            self(self, w);
        }
    };
    walk(walk, *root);
    return out;
}

} // namespace

EdgeStream order_adversarial(const FamilyTag& tag, std::uint32_t seed) {
    tag.validate();
    const int n = tag.n;
    std::vector<LabelEdge> edges;
    switch (tag.family) {
        case Family::Path:
        case Family::Star:
            edges = family_edges(tag);
            break;
        case Family::Cycle:
            // Path edges first, closing edge last.
            edges = family_edges(tag);
            break;
        case Family::Wheel:
            // Spokes first, then around the rim; identical to construction
            // order.
            edges = family_edges(tag);
            break;
        case Family::Complete: {
            // Hamiltonian path, then the remaining pairs lexicographically.
            for (int i = 1; i < n; ++i) edges.emplace_back(lab(i), lab(i + 1));
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (j != i + 1) edges.emplace_back(lab(i), lab(j));
            break;
        }
        case Family::Tree: {
            Graph t = make_random_tree(n, seed);
            edges = dfs_discovery_edges(t);
            break;
        }
        case Family::CompleteBipartite:
            fail(Errc::BadParameters, "no adversarial order is defined for complete_bipartite");
    }
    std::optional<std::uint32_t> prov_seed;
    if (tag.family == Family::Tree) prov_seed = seed;
    return stream_of(std::move(edges), tag, OrderStrategy::Adversarial, prov_seed);
}

EdgeStream order_natural(const FamilyTag& tag, std::uint32_t seed) {
    tag.validate();
    std::vector<LabelEdge> edges = tag.family == Family::Tree ? random_tree_edges(tag.n, seed)
                                                              : family_edges(tag);
    std::optional<std::uint32_t> prov_seed;
    if (tag.family == Family::Tree) prov_seed = seed;
    return stream_of(std::move(edges), tag, OrderStrategy::Natural, prov_seed);
}

EdgeStream order_random_connected(const Graph& g, std::uint32_t seed) {
    if (!g.is_connected()) fail(Errc::Disconnected, "random order requires a connected graph");
    const auto& all = g.edges();
    const int m = static_cast<int>(all.size());
    EdgeStream s;
    s.provenance.order = OrderStrategy::Random;
    s.provenance.seed = seed;
    s.provenance.source = "graph";
    if (m == 0) return s;

    std::mt19937 rng(seed);
    std::vector<char> placed_vertex(g.vertex_count(), 0);
    std::vector<char> emitted(m, 0);
    std::vector<int> frontier; // candidate edge indices, ascending

    auto emit = [&](int idx) {
        emitted[idx] = 1;
        const Edge& e = all[idx];
        s.edges.emplace_back(g.label(e.u), g.label(e.v));
        for (VertexId v : {e.u, e.v}) {
            if (placed_vertex[v]) continue;
            placed_vertex[v] = 1;
            for (VertexId w : g.neighbors(v)) {
                int fi = *g.edge_index(Edge(v, w));
                if (!emitted[fi] && std::find(frontier.begin(), frontier.end(), fi) == frontier.end())
                    frontier.push_back(fi);
            }
        }
        frontier.erase(std::remove(frontier.begin(), frontier.end(), idx), frontier.end());
        std::sort(frontier.begin(), frontier.end());
    };

    emit(static_cast<int>(uniform_below(rng, static_cast<std::uint32_t>(m))));
    while (static_cast<int>(s.edges.size()) < m) {
        int pick = frontier[uniform_below(rng, static_cast<std::uint32_t>(frontier.size()))];
        emit(pick);
    }
    return s;
}

EdgeStream make_stream(const FamilyTag& tag, OrderStrategy order, std::uint32_t seed) {
    switch (order) {
        case OrderStrategy::Adversarial: return order_adversarial(tag, seed);
        case OrderStrategy::Natural: return order_natural(tag, seed);
        case OrderStrategy::Random: {
            Graph g = tag.family == Family::Tree ? make_random_tree(tag.n, seed) : make_graph(tag);
            EdgeStream s = order_random_connected(g, seed);
            s.provenance.family = tag;
            s.provenance.source = "family";
            return s;
        }
    }
    fail(Errc::Internal, "unhandled order strategy");
}

Graph EdgeStream::build_graph() const {
    Graph g;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& [u, v] = edges[i];
        const bool first = g.edge_count() == 0;
        if (!first && !g.find_vertex(u) && !g.find_vertex(v))
            fail(Errc::DisconnectedPrefix,
                 "edge (" + u + "," + v + ") shares no vertex with the preceding prefix",
                 static_cast<int>(i + 1));
        g.add_edge(u, v);
    }
    return g;
}

EdgeStream stream_from_text(std::istream& in, const std::string& source_name) {
    EdgeStream s;
    s.provenance.source = source_name;
    Graph prefix;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string u, v, extra;
        if (!(tokens >> u)) continue; // blank or comment-only line
        if (!(tokens >> v))
            fail(Errc::ParseError, "expected two labels", line_no);
        if (tokens >> extra)
            fail(Errc::ParseError, "expected exactly two labels, got more", line_no);
        try {
            if (prefix.edge_count() > 0 && !prefix.find_vertex(u) && !prefix.find_vertex(v))
                fail(Errc::DisconnectedPrefix,
                     "edge (" + u + "," + v + ") shares no vertex with the preceding prefix");
            prefix.add_edge(u, v);
        } catch (const Error& e) {
            throw Error(e.code(), e.what(), line_no);
        }
        s.edges.emplace_back(u, v);
    }
    return s;
}

EdgeStream stream_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open " + path);
    return stream_from_text(in, path);
}

void write_edge_list(std::ostream& out, const EdgeStream& stream) {
    const Provenance& prov = stream.provenance;
    if (prov.family) {
        out << "# family=" << family_name(prov.family->family) << " "
            << prov.family->params_string();
        if (prov.order) out << " order=" << order_name(*prov.order);
        if (prov.seed) out << " seed=" << *prov.seed;
        out << "\n";
    }
    for (const auto& [u, v] : stream.edges) out << u << " " << v << "\n";
}

} // namespace rainbow
