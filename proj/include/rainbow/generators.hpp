// generators.hpp — graph-family constructors and arrival-order builders.
//
// Families use canonical vertex labels "1".."n". Every produced EdgeStream
// keeps the connected-prefix property: each prefix of the arrival order
// induces a connected graph. Seeded operations are bit-reproducible (mt19937
// plus rejection sampling, no distribution objects).
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

enum class Family { Path, Tree, Star, Cycle, Wheel, Complete, CompleteBipartite };

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

struct FamilyTag {
    Family family = Family::Path;
    int n = 0; // vertex count (p + q for bipartite)
    int p = 0; // bipartite part sizes
    int q = 0;

    static FamilyTag of(Family f, int n) { return FamilyTag{f, n, 0, 0}; }
    static FamilyTag bipartite(int p, int q) {
        return FamilyTag{Family::CompleteBipartite, p + q, p, q};
    }

    // Throws BadParameters when outside the family's validity range
    // (path n>=2, star n>=3, cycle n>=3, wheel n>=4, complete n>=2,
    // bipartite p,q>=1). Tree tags are valid for n>=2 but carry no shape;
    // build trees with make_random_tree.
    void validate() const;

    // "n=5" or "p=2;q=3"; used in report rows.
    std::string params_string() const;
};

// The family graph with labels "1".."n" and a deterministic edge order:
// path/star/cycle in natural order, wheel spokes then rim, complete and
// bipartite lexicographic. Family::Tree has no canonical shape ->
// BadParameters.
Graph make_graph(const FamilyTag& tag);

// Random tree: vertex i+1 attaches to a seeded-uniform pick among 1..i.
Graph make_random_tree(int n, std::uint32_t seed);

enum class OrderStrategy { Adversarial, Random, Natural };

std::string_view order_name(OrderStrategy o);
std::optional<OrderStrategy> order_from_name(std::string_view name);

struct Provenance {
    std::optional<FamilyTag> family;
    std::optional<OrderStrategy> order;
    std::optional<std::uint32_t> seed;
    std::string source; // "family" or the input path
};

struct EdgeStream {
    std::vector<std::pair<std::string, std::string>> edges;
    Provenance provenance;

    int size() const { return static_cast<int>(edges.size()); }

    // The graph induced by the whole stream (edge-index order = arrival
    // order). Also validates the stream.
    Graph build_graph() const;
};

// Worst-case arrival orders: cycle -> path edges then the closing edge;
// wheel -> spokes then rim; complete -> Hamiltonian path then the remaining
// edges in lexicographic order; path/star -> natural order; tree -> a seeded
// random tree in depth-first discovery order from vertex 1 (trees are the one
// family where the tag alone does not fix the graph, so the seed picks it).
EdgeStream order_adversarial(const FamilyTag& tag, std::uint32_t seed = 0);

// The construction order of make_graph (for trees: the attachment order of
// make_random_tree).
EdgeStream order_natural(const FamilyTag& tag, std::uint32_t seed = 0);

// Connectivity-preserving random permutation of g's edges: the first edge is
// uniform over all edges, each later edge uniform over the frontier (edges
// with at least one endpoint already placed). Throws Disconnected.
EdgeStream order_random_connected(const Graph& g, std::uint32_t seed);

// Convenience: family instance + order strategy in one call.
EdgeStream make_stream(const FamilyTag& tag, OrderStrategy order, std::uint32_t seed = 0);

// Edge-list text: one edge per line, two whitespace-separated labels, '#'
// starts a comment, blank lines ignored. Validates self-loops, duplicates and
// connected prefixes; errors carry the 1-based line number.
EdgeStream stream_from_file(const std::string& path);
EdgeStream stream_from_text(std::istream& in, const std::string& source_name);

// Edge-list serialization of a stream (with a provenance comment header).
void write_edge_list(std::ostream& out, const EdgeStream& stream);

// Seeded helpers shared by the generators and the test harness.
// Unbiased uniform draw from [0, bound) off a raw mt19937; bit-stable across
// platforms, unlike std::uniform_int_distribution.
std::uint32_t uniform_below(std::mt19937& rng, std::uint32_t bound);

} // namespace rainbow
