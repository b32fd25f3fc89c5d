// json_io.hpp — JSON shapes for traces, colorings, solver results and
// experiment reports. Field order is fixed so identical inputs produce
// byte-identical output.
#pragma once

#include <json.hpp>

#include "rainbow/harness.hpp"
#include "rainbow/lruc.hpp"
#include "rainbow/oracle.hpp"

namespace rainbow {

using OrderedJson = nlohmann::ordered_json;

// One trace line per observed edge: {"u","v","color","case"}.
OrderedJson trace_record(const LrucStep& step);

// {"edges":[{"u","v","color"},...],"colors_used":k}, edges in edge-index
// (arrival) order.
OrderedJson coloring_json(const Graph& g, const Coloring& coloring);

// Inverse of coloring_json; labels are resolved against g. Throws ParseError,
// UnknownVertex (label not in g), IncompleteColoring (edge not in g).
Coloring coloring_from_json(const OrderedJson& doc, const Graph& g);
Coloring coloring_from_json_file(const std::string& path, const Graph& g);

// {"rc":k,"witness":{...}}.
OrderedJson rc_result_json(const Graph& g, const RcResult& result);

// Full single-instance report.
OrderedJson report_json(const RatioReport& report);

} // namespace rainbow
