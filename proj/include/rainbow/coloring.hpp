// coloring.hpp — edge->color assignments shared by the online colorer and the
// exact solver. Color ordinals are 1-based and allocated consecutively.
#pragma once

#include <map>
#include <optional>
#include <set>

#include "rainbow/graph.hpp"

namespace rainbow {

using ColorId = int;

struct Coloring {
    std::map<Edge, ColorId> assignments;
    int colors_used = 0;

    std::optional<ColorId> color_of(Edge e) const {
        auto it = assignments.find(e);
        if (it == assignments.end()) return std::nullopt;
        return it->second;
    }

    // Recount of distinct colors actually present; equals colors_used for any
    // coloring built by this toolkit.
    int distinct_colors() const {
        std::set<ColorId> seen;
        for (const auto& [edge, color] : assignments) seen.insert(color);
        return static_cast<int>(seen.size());
    }
};

} // namespace rainbow
