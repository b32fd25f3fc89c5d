#include "rainbow/json_io.hpp"

#include <fstream>

namespace rainbow {

OrderedJson trace_record(const LrucStep& step) {
    OrderedJson rec;
    rec["u"] = step.u_label;
    rec["v"] = step.v_label;
    rec["color"] = step.color;
    rec["case"] = case_tag_name(step.tag);
    return rec;
}

OrderedJson coloring_json(const Graph& g, const Coloring& coloring) {
    OrderedJson edges = OrderedJson::array();
    for (const Edge& e : g.edges()) {
        auto c = coloring.color_of(e);
        if (!c)
            fail(Errc::IncompleteColoring,
                 "edge (" + g.label(e.u) + "," + g.label(e.v) + ") has no color");
        OrderedJson rec;
        rec["u"] = g.label(e.u);
        rec["v"] = g.label(e.v);
        rec["color"] = *c;
        edges.push_back(std::move(rec));
    }
    OrderedJson doc;
    doc["edges"] = std::move(edges);
    doc["colors_used"] = coloring.colors_used;
    return doc;
}

Coloring coloring_from_json(const OrderedJson& doc, const Graph& g) {
    if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array())
        fail(Errc::ParseError, "coloring file must be an object with an 'edges' array");
    Coloring coloring;
    for (const auto& rec : doc["edges"]) {
        if (!rec.is_object() || !rec.contains("u") || !rec.contains("v") || !rec.contains("color") ||
            !rec["u"].is_string() || !rec["v"].is_string() || !rec["color"].is_number_integer())
            fail(Errc::ParseError, "each edge record needs string u, string v, integer color");
        const std::string u = rec["u"];
        const std::string v = rec["v"];
        const int color = rec["color"];
        if (color < 1) fail(Errc::ParseError, "colors are positive integers");
        auto ui = g.find_vertex(u);
        auto vi = g.find_vertex(v);
        if (!ui || !vi)
            fail(Errc::UnknownVertex, "coloring names vertex absent from the graph: (" + u + "," + v + ")");
        Edge e(*ui, *vi);
        if (!g.has_edge(e))
            fail(Errc::IncompleteColoring, "coloring names edge absent from the graph: (" + u + "," + v + ")");
        if (coloring.assignments.count(e))
            fail(Errc::ParseError, "duplicate edge in coloring: (" + u + "," + v + ")");
        coloring.assignments[e] = color;
    }
    coloring.colors_used = coloring.distinct_colors();
    return coloring;
}

Coloring coloring_from_json_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open " + path);
    OrderedJson doc;
    try {
        doc = OrderedJson::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
    }
    return coloring_from_json(doc, g);
}

OrderedJson rc_result_json(const Graph& g, const RcResult& result) {
    OrderedJson doc;
    doc["rc"] = result.rc;
    doc["witness"] = coloring_json(g, result.witness);
    return doc;
}

namespace {

OrderedJson ratio_json(const Ratio& r) {
    OrderedJson doc;
    doc["num"] = r.numerator();
    doc["den"] = r.denominator();
    return doc;
}

} // namespace

OrderedJson report_json(const RatioReport& report) {
    OrderedJson doc;
    doc["family"] = report.family;
    doc["n"] = report.n;
    doc["params"] = report.params;
    doc["order"] = report.order;
    doc["seed"] = report.seed ? OrderedJson(*report.seed) : OrderedJson(nullptr);
    doc["colors_online"] = report.colors_online;
    doc["rc"] = report.rc ? OrderedJson(*report.rc) : OrderedJson(nullptr);
    doc["rc_mode"] = report.rc_mode;
    doc["ratio"] = report.ratio ? ratio_json(*report.ratio) : OrderedJson(nullptr);
    doc["theorem"] = report.theorem_id;
    doc["bound"] = report.bound ? ratio_json(*report.bound) : OrderedJson(nullptr);
    doc["within_bound"] = report.within_bound ? OrderedJson(*report.within_bound) : OrderedJson(nullptr);
    doc["rainbow_valid"] = report.rainbow_valid;
    return doc;
}

} // namespace rainbow
