// lruc.hpp — the streaming least-recently-used-color engine.
//
// Edges arrive one at a time; every prefix of the arrival order must induce a
// connected graph. Each edge is colored irrevocably on arrival by a four-case
// ladder:
//
//   FirstEdge    the very first edge            -> allocate c_1
//   FreshAdjOne  adjacent to exactly one edge   -> allocate the next color
//   FreshPendant adjacent to >= 2 edges and one
//                endpoint has degree 1 after
//                insertion                      -> allocate the next color
//   ReuseLru     both endpoints have degree >= 2
//                after insertion                -> reuse the least recently
//                                                  used color
//
// Every assignment (fresh or reused) counts as a use and moves the color to
// the back of the recency queue.
#pragma once

#include <cassert>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

enum class CaseTag { FirstEdge, FreshAdjOne, FreshPendant, ReuseLru };

std::string_view case_tag_name(CaseTag tag);

// Colors ordered by last-use time, oldest first. Holds every allocated color
// exactly once; assignments happen at distinct time steps, so the order is
// total.
class RecencyQueue {
public:
    void push_new(ColorId c) {
        assert(!contains(c));
        order_.push_back(c);
    }

    // Oldest color; queue must be non-empty.
    ColorId least_recent() const {
        assert(!order_.empty());
        return order_.front();
    }

    // Marks c as just used: moves it to the back.
    void touch(ColorId c);

    bool contains(ColorId c) const;
    int size() const { return static_cast<int>(order_.size()); }
    const std::vector<ColorId>& order() const { return order_; }

private:
    std::vector<ColorId> order_; // oldest -> newest
};

struct LrucStep {
    std::string u_label;
    std::string v_label;
    Edge edge;
    ColorId color = 0;
    CaseTag tag = CaseTag::FirstEdge;
};

class LrucColorer {
public:
    // Colors the arriving edge and returns what happened. Throws SelfLoop,
    // DuplicateEdge, or DisconnectedPrefix (neither endpoint seen before).
    LrucStep observe_edge(std::string_view u_label, std::string_view v_label);

    // Final coloring; EmptyStream if no edge was ever observed.
    Coloring finish() const;

    const Graph& partial() const { return partial_; }
    int colors_allocated() const { return next_ordinal_ - 1; }
    int edges_observed() const { return partial_.edge_count(); }
    const std::vector<ColorId>& recency_order() const { return queue_.order(); }

private:
    ColorId allocate_color();

    Graph partial_;
    std::map<Edge, ColorId> assignment_;
    RecencyQueue queue_;
    int next_ordinal_ = 1;
};

} // namespace rainbow
