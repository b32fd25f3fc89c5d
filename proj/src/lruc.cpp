#include "rainbow/lruc.hpp"

#include <algorithm>

namespace rainbow {

std::string_view case_tag_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::FirstEdge: return "FirstEdge";
        case CaseTag::FreshAdjOne: return "FreshAdjOne";
        case CaseTag::FreshPendant: return "FreshPendant";
        case CaseTag::ReuseLru: return "ReuseLru";
    }
    return "FirstEdge";
}

void RecencyQueue::touch(ColorId c) {
    auto it = std::find(order_.begin(), order_.end(), c);
    assert(it != order_.end());
    order_.erase(it);
    order_.push_back(c);
}

bool RecencyQueue::contains(ColorId c) const {
    return std::find(order_.begin(), order_.end(), c) != order_.end();
}

ColorId LrucColorer::allocate_color() {
    ColorId c = next_ordinal_++;
    queue_.push_new(c);
    return c;
}

LrucStep LrucColorer::observe_edge(std::string_view u_label, std::string_view v_label) {
    const bool first = partial_.edge_count() == 0;
    if (u_label == v_label)
        fail(Errc::SelfLoop, "self-loop edge (" + std::string(u_label) + "," + std::string(v_label) + ")");
    const bool u_known = partial_.find_vertex(u_label).has_value();
    const bool v_known = partial_.find_vertex(v_label).has_value();
    if (!first && !u_known && !v_known)
        fail(Errc::DisconnectedPrefix,
             "edge (" + std::string(u_label) + "," + std::string(v_label) +
                 ") shares no vertex with the arrived graph");

    // Count of already-arrived edges adjacent to the new one. Computed before
    // insertion; identical after insertion since the count excludes the edge
    // itself.
    const int adj = first ? 0 : partial_.adjacent_edge_count(u_label, v_label);

    Edge e = partial_.add_edge(u_label, v_label); // SelfLoop/DuplicateEdge

    LrucStep step;
    step.u_label = std::string(u_label);
    step.v_label = std::string(v_label);
    step.edge = e;

    if (first) {
        step.tag = CaseTag::FirstEdge;
        step.color = allocate_color();
    } else if (adj == 1) {
        // Joining two existing vertices would contribute one adjacent edge per
        // endpoint, so this branch always introduces a vertex.
        assert(!u_known || !v_known);
        step.tag = CaseTag::FreshAdjOne;
        step.color = allocate_color();
    } else if (std::min(partial_.degree(e.u), partial_.degree(e.v)) == 1) {
        // Degrees measured after insertion: the degree-1 endpoint is the
        // vertex this edge introduced.
        step.tag = CaseTag::FreshPendant;
        step.color = allocate_color();
    } else {
        step.tag = CaseTag::ReuseLru;
        step.color = queue_.least_recent();
    }

    queue_.touch(step.color);
    assignment_.emplace(e, step.color);
    assert(next_ordinal_ == queue_.size() + 1);
    return step;
}

Coloring LrucColorer::finish() const {
    if (partial_.edge_count() == 0)
        fail(Errc::EmptyStream, "no edges observed");
    Coloring out;
    out.assignments = assignment_;
    out.colors_used = colors_allocated();
    assert(out.colors_used == out.distinct_colors());
    return out;
}

} // namespace rainbow
