// oracle.hpp — exact offline rainbow-connectivity machinery.
//
// is_rainbow_connected / rainbow_witness decide rainbow reachability by a
// per-source search over (vertex, used-color-set) states, at most n * 2^k of
// them. rc_exact finds the minimum color count by iterating k upward from the
// diameter lower bound and running a depth-first search over edge colorings in
// edge-index order, with first-use symmetry breaking (ordinal j may appear
// only after 1..j-1) and an exact prune: a partial assignment is abandoned
// only when some vertex pair is rainbow-disconnected even if every uncolored
// edge were traversable for free.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

struct SearchBudget {
    int max_edges = 16;
    std::optional<double> max_seconds; // wall clock; unset = unlimited
};

struct RcResult {
    int rc = 0;
    Coloring witness; // first valid coloring in search order
};

// True iff every vertex pair of g has a path whose edge colors are pairwise
// distinct. The coloring must assign every edge of g (IncompleteColoring).
bool is_rainbow_connected(const Graph& g, const Coloring& coloring);

// First unordered pair (by ascending indices) with no rainbow path, if any.
std::optional<std::pair<VertexId, VertexId>> first_rainbow_failure(const Graph& g,
                                                                   const Coloring& coloring);

// A distinct-color path from u to v as a vertex sequence, if one exists.
// Breadth-first with ascending neighbor expansion, so the result is
// deterministic for fixed input.
std::optional<std::vector<VertexId>> rainbow_witness(const Graph& g, const Coloring& coloring,
                                                     VertexId u, VertexId v);

// Exact rainbow connection number with a minimal witness coloring.
// Throws Disconnected, EmptyStream (no edges), BudgetExceeded.
RcResult rc_exact(const Graph& g, const SearchBudget& budget = {});

// The closed-form rc value for families where one is known: path/tree/star ->
// m, cycle (n>=4) -> ceil(n/2), wheel (n>=8) -> 3, complete -> 1, bipartite
// (p,q>=2) -> 2. Absent for out-of-range parameters.
std::optional<int> rc_closed_form(const FamilyTag& tag);

} // namespace rainbow
