#include "rainbow/harness.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rainbow/lruc.hpp"

namespace rainbow {

std::string_view oracle_mode_name(OracleMode m) {
    switch (m) {
        case OracleMode::Exact: return "exact";
        case OracleMode::ClosedForm: return "closed";
        case OracleMode::Skip: return "skip";
    }
    return "exact";
}

std::optional<OracleMode> oracle_mode_from_name(std::string_view name) {
    for (OracleMode m : {OracleMode::Exact, OracleMode::ClosedForm, OracleMode::Skip})
        if (oracle_mode_name(m) == name) return m;
    return std::nullopt;
}

Ratio TheoremSpec::bound(int n) const {
    if (n < n_valid_min)
        fail(Errc::BadParameters, id + ": bound is stated for n >= " + std::to_string(n_valid_min));
    if (id == "T2-cycle") return Ratio(2) - Ratio(2, n);
    if (id == "T3-wheel") return Ratio(n - 1, 3);
    if (id == "T4-complete") return Ratio(n - 1);
    return Ratio(1); // T1-line / T1-tree / T1-star
}

const std::vector<TheoremSpec>& theorem_table() {
    static const std::vector<TheoremSpec> table = {
        {"T1-line", Family::Path, 2, 2, 10},
        {"T1-tree", Family::Tree, 3, 3, 10},
        {"T1-star", Family::Star, 3, 3, 10},
        {"T2-cycle", Family::Cycle, 4, 4, 9},
        {"T3-wheel", Family::Wheel, 8, 8, 9},
        {"T4-complete", Family::Complete, 2, 4, 7},
    };
    return table;
}

const TheoremSpec* find_theorem(std::string_view id) {
    for (const TheoremSpec& spec : theorem_table())
        if (spec.id == id) return &spec;
    return nullptr;
}

const TheoremSpec* applicable_theorem(Family family, int n) {
    for (const TheoremSpec& spec : theorem_table())
        if (spec.family == family && n >= spec.n_valid_min) return &spec;
    return nullptr;
}

RatioReport run_instance(const EdgeStream& stream, const InstanceOptions& opts) {
    Graph g = stream.build_graph();

    LrucColorer colorer;
    for (const auto& [u, v] : stream.edges) colorer.observe_edge(u, v);
    const Coloring online = colorer.finish();

    RatioReport report;
    const Provenance& prov = stream.provenance;
    if (prov.family) {
        report.family = std::string(family_name(prov.family->family));
        report.params = prov.family->params_string();
    } else {
        report.family = prov.source;
        report.params = "n=" + std::to_string(g.vertex_count());
    }
    report.n = g.vertex_count();
    report.order = prov.order ? std::string(order_name(*prov.order)) : "file";
    report.seed = prov.seed;
    report.colors_online = online.colors_used;
    report.rainbow_valid = is_rainbow_connected(g, online);

    switch (opts.oracle) {
        case OracleMode::Exact:
            report.rc = rc_exact(g, opts.budget).rc;
            report.rc_mode = "exact";
            break;
        case OracleMode::ClosedForm:
            if (prov.family) report.rc = rc_closed_form(*prov.family);
            report.rc_mode = report.rc ? "closed" : "skip";
            break;
        case OracleMode::Skip:
            report.rc_mode = "skip";
            break;
    }
    if (report.rc) report.ratio = Ratio(report.colors_online, *report.rc);

    if (prov.family) {
        if (const TheoremSpec* spec = applicable_theorem(prov.family->family, report.n)) {
            report.theorem_id = spec->id;
            report.bound = spec->bound(report.n);
            if (report.ratio) report.within_bound = *report.ratio <= *report.bound;
        }
    }
    return report;
}

TheoremRun verify_theorem(const TheoremSpec& spec, int n_lo, int n_hi,
                          const InstanceOptions& opts) {
    if (n_lo < spec.n_valid_min || n_hi < n_lo)
        fail(Errc::BadParameters,
             spec.id + ": range must lie within n >= " + std::to_string(spec.n_valid_min));
    TheoremRun run;
    run.pass = true;
    for (int n = n_lo; n <= n_hi; ++n) {
        EdgeStream stream = order_adversarial(FamilyTag::of(spec.family, n), 0);
        RatioReport row = run_instance(stream, opts);
        row.theorem_id = spec.id;
        if (!row.within_bound.value_or(false) || !row.rainbow_valid) run.pass = false;
        run.rows.push_back(std::move(row));
    }
    return run;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

int parse_int(const std::string& field, const std::string& text) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        fail(Errc::ConfigError, field + ": expected an integer, got '" + text + "'");
    }
}

// "4..7" or "4,5,6".
std::vector<int> parse_int_list(const std::string& field, const std::string& value) {
    std::vector<int> out;
    auto dots = value.find("..");
    if (dots != std::string::npos) {
        int lo = parse_int(field, trim(value.substr(0, dots)));
        int hi = parse_int(field, trim(value.substr(dots + 2)));
        if (hi < lo) fail(Errc::ConfigError, field + ": empty range " + value);
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    for (const std::string& item : split_list(value)) out.push_back(parse_int(field, item));
    return out;
}

} // namespace

SweepConfig parse_sweep_config(std::istream& in) {
    SweepConfig config;
    config.orders = {OrderStrategy::Adversarial};
    config.seeds = {0};

    std::string line;
    int line_no = 0;
    bool saw_families = false;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(Errc::ConfigError, "expected key = value", line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "families") {
            saw_families = true;
            for (const std::string& item : split_list(value)) {
                auto f = family_from_name(item);
                if (!f) fail(Errc::ConfigError, "families: unknown family '" + item + "'");
                config.families.push_back(*f);
            }
        } else if (key == "n") {
            config.ns = parse_int_list("n", value);
        } else if (key == "pq") {
            for (const std::string& item : split_list(value)) {
                auto colon = item.find(':');
                if (colon == std::string::npos)
                    fail(Errc::ConfigError, "pq: expected p:q, got '" + item + "'");
                config.pqs.emplace_back(parse_int("pq", trim(item.substr(0, colon))),
                                        parse_int("pq", trim(item.substr(colon + 1))));
            }
        } else if (key == "orders") {
            config.orders.clear();
            for (const std::string& item : split_list(value)) {
                auto o = order_from_name(item);
                if (!o) fail(Errc::ConfigError, "orders: unknown order '" + item + "'");
                config.orders.push_back(*o);
            }
        } else if (key == "seeds") {
            config.seeds.clear();
            for (int v : parse_int_list("seeds", value)) {
                if (v < 0) fail(Errc::ConfigError, "seeds: must be non-negative");
                config.seeds.push_back(static_cast<std::uint32_t>(v));
            }
        } else if (key == "oracle") {
            auto m = oracle_mode_from_name(value);
            if (!m) fail(Errc::ConfigError, "oracle: expected exact|closed|skip, got '" + value + "'");
            config.oracle = *m;
        } else if (key == "budget_edges") {
            config.budget.max_edges = parse_int("budget_edges", value);
        } else if (key == "budget_seconds") {
            try {
                config.budget.max_seconds = std::stod(value);
            } catch (const std::exception&) {
                fail(Errc::ConfigError, "budget_seconds: expected a number, got '" + value + "'");
            }
        } else if (key == "out") {
            config.out = value;
        } else {
            fail(Errc::ConfigError, key + ": unknown key");
        }
    }

    if (!saw_families || config.families.empty())
        fail(Errc::ConfigError, "families: must list at least one family");
    bool needs_n = false, needs_pq = false;
    for (Family f : config.families)
        (f == Family::CompleteBipartite ? needs_pq : needs_n) = true;
    if (needs_n && config.ns.empty())
        fail(Errc::ConfigError, "n: required for the listed families");
    if (needs_pq && config.pqs.empty())
        fail(Errc::ConfigError, "pq: required for complete_bipartite");
    if (config.orders.empty()) fail(Errc::ConfigError, "orders: must list at least one order");
    if (config.seeds.empty()) fail(Errc::ConfigError, "seeds: must list at least one seed");
    return config;
}

SweepConfig parse_sweep_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ConfigError, "cannot open " + path);
    return parse_sweep_config(in);
}

std::vector<RatioReport> sweep(const SweepConfig& config) {
    InstanceOptions opts{config.oracle, config.budget};
    std::vector<RatioReport> rows;

    auto run_tag = [&](const FamilyTag& tag) {
        for (OrderStrategy order : config.orders) {
            const bool seeded = order == OrderStrategy::Random || tag.family == Family::Tree;
            if (seeded) {
                for (std::uint32_t seed : config.seeds)
                    rows.push_back(run_instance(make_stream(tag, order, seed), opts));
            } else {
                RatioReport row = run_instance(make_stream(tag, order, 0), opts);
                row.seed.reset();
                rows.push_back(std::move(row));
            }
        }
    };

    for (Family family : config.families) {
        if (family == Family::CompleteBipartite) {
            for (const auto& [p, q] : config.pqs) run_tag(FamilyTag::bipartite(p, q));
        } else {
            for (int n : config.ns) run_tag(FamilyTag::of(family, n));
        }
    }
    return rows;
}

namespace {

std::string csv_ratio_num(const std::optional<Ratio>& r) {
    return r ? std::to_string(r->numerator()) : "";
}
std::string csv_ratio_den(const std::optional<Ratio>& r) {
    return r ? std::to_string(r->denominator()) : "";
}

} // namespace

void write_report_csv(std::ostream& out, const std::vector<RatioReport>& rows,
                      bool with_theorem_column) {
    if (with_theorem_column) out << "theorem,";
    out << "family,n,params,order,seed,colors_online,rc,ratio_num,ratio_den,"
           "bound_num,bound_den,within_bound,rainbow_valid\n";
    for (const RatioReport& row : rows) {
        if (with_theorem_column) out << row.theorem_id << ",";
        out << row.family << "," << row.n << "," << row.params << "," << row.order << ",";
        if (row.seed) out << *row.seed;
        out << "," << row.colors_online << ",";
        if (row.rc) out << *row.rc;
        out << "," << csv_ratio_num(row.ratio) << "," << csv_ratio_den(row.ratio) << ","
            << csv_ratio_num(row.bound) << "," << csv_ratio_den(row.bound) << ",";
        if (row.within_bound) out << (*row.within_bound ? "true" : "false");
        out << "," << (row.rainbow_valid ? "true" : "false") << "\n";
    }
}

} // namespace rainbow
