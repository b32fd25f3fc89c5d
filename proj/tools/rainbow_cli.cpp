// rainbow_cli.cpp — command-line entry point.
//
// Subcommands: generate | color | rc | check | ratio | verify-theorems.
// Exit codes: 0 success, 1 domain error (one machine-parsable line on
// stderr), 2 usage error. verify-theorems exits 1 when a bound fails.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "rainbow/generators.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/json_io.hpp"
#include "rainbow/lruc.hpp"
#include "rainbow/oracle.hpp"

namespace {

using namespace rainbow;

FamilyTag tag_from_flags(const std::string& family, int n, int p, int q) {
    auto f = family_from_name(family);
    if (!f) fail(Errc::BadParameters, "unknown family '" + family + "'");
    FamilyTag tag;
    if (*f == Family::CompleteBipartite) {
        if (p <= 0 || q <= 0) fail(Errc::BadParameters, "complete_bipartite needs --p and --q");
        tag = FamilyTag::bipartite(p, q);
    } else {
        if (n <= 0) fail(Errc::BadParameters, std::string(family_name(*f)) + " needs --n");
        tag = FamilyTag::of(*f, n);
    }
    tag.validate();
    return tag;
}

OrderStrategy order_from_flag(const std::string& name) {
    auto o = order_from_name(name);
    if (!o) fail(Errc::BadParameters, "unknown order '" + name + "'");
    return *o;
}

OracleMode oracle_from_flag(const std::string& name) {
    auto m = oracle_mode_from_name(name);
    if (!m) fail(Errc::BadParameters, "unknown oracle mode '" + name + "'");
    return *m;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) fail(Errc::ParseError, "cannot open " + path + " for writing");
    return file;
}

// Streams stdin or a file through the online colorer line by line, emitting a
// trace record per edge as it arrives.
int run_color(const std::string& input, const std::string& out_path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    std::string source = "<stdin>";
    if (!input.empty() && input != "-") {
        file.open(input);
        if (!file) fail(Errc::ParseError, "cannot open " + input);
        in = &file;
        source = input;
    }

    LrucColorer colorer;
    std::string line;
    int line_no = 0;
    while (std::getline(*in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string u, v, extra;
        if (!(tokens >> u)) continue;
        if (!(tokens >> v)) fail(Errc::ParseError, "expected two labels", line_no);
        if (tokens >> extra) fail(Errc::ParseError, "expected exactly two labels, got more", line_no);
        try {
            LrucStep step = colorer.observe_edge(u, v);
            std::cout << trace_record(step).dump() << "\n" << std::flush;
        } catch (const Error& e) {
            throw Error(e.code(), e.what(), line_no);
        }
    }
    Coloring coloring = colorer.finish(); // EmptyStream on no edges
    OrderedJson footer;
    footer["colors_used"] = coloring.colors_used;
    std::cout << footer.dump() << "\n";

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) fail(Errc::ParseError, "cannot open " + out_path + " for writing");
        out << coloring_json(colorer.partial(), coloring).dump(2) << "\n";
    }
    return 0;
}

EdgeStream stream_from_input(const std::string& input) {
    if (input.empty() || input == "-") return stream_from_text(std::cin, "<stdin>");
    return stream_from_file(input);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"streaming rainbow coloring toolkit"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "emit a graph family as an edge-list stream");
    std::string gen_family, gen_order = "natural", gen_out;
    int gen_n = 0, gen_p = 0, gen_q = 0;
    std::uint32_t gen_seed = 0;
    gen->add_option("--family", gen_family, "path|tree|star|cycle|wheel|complete|complete_bipartite")
        ->required();
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--p", gen_p, "left part size (complete_bipartite)");
    gen->add_option("--q", gen_q, "right part size (complete_bipartite)");
    gen->add_option("--order", gen_order, "adversarial|random|natural (default natural)");
    gen->add_option("--seed", gen_seed, "seed for random orders and tree shapes");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // color
    auto* color = app.add_subcommand("color", "color an edge stream online, printing a JSON trace");
    std::string color_input, color_out;
    color->add_option("input", color_input, "edge-list file, or - for stdin");
    color->add_option("--out", color_out, "write the final coloring as JSON");

    // rc
    auto* rc = app.add_subcommand("rc", "exact rainbow connection number of a graph");
    std::string rc_input;
    int rc_budget_edges = 16;
    double rc_budget_seconds = 0;
    rc->add_option("input", rc_input, "edge-list file, or - for stdin");
    rc->add_option("--budget-edges", rc_budget_edges, "max edges the exact search accepts (default 16)");
    rc->add_option("--budget-seconds", rc_budget_seconds, "wall-clock cap for the search (default none)");

    // check
    auto* check = app.add_subcommand("check", "validate a coloring file against a graph");
    std::string check_graph, check_coloring;
    check->add_option("graph", check_graph, "edge-list file")->required();
    check->add_option("coloring", check_coloring, "coloring JSON file")->required();

    // ratio
    auto* ratio = app.add_subcommand("ratio", "online-vs-offline ratio for one instance or a sweep");
    std::string ratio_config, ratio_family, ratio_order = "adversarial", ratio_oracle = "exact",
                ratio_out;
    int ratio_n = 0, ratio_p = 0, ratio_q = 0, ratio_budget_edges = 16;
    double ratio_budget_seconds = 0;
    std::uint32_t ratio_seed = 0;
    auto* ratio_config_opt = ratio->add_option("--config", ratio_config, "sweep config file");
    auto* ratio_family_opt = ratio->add_option("--family", ratio_family, "single-instance family");
    ratio->add_option("--n", ratio_n, "vertex count");
    ratio->add_option("--p", ratio_p, "left part size");
    ratio->add_option("--q", ratio_q, "right part size");
    ratio->add_option("--order", ratio_order, "adversarial|random|natural (default adversarial)");
    ratio->add_option("--seed", ratio_seed, "instance seed");
    ratio->add_option("--oracle", ratio_oracle, "exact|closed|skip (default exact)");
    ratio->add_option("--budget-edges", ratio_budget_edges, "exact-search edge budget");
    ratio->add_option("--budget-seconds", ratio_budget_seconds, "exact-search time budget");
    ratio->add_option("--out", ratio_out, "CSV output path for sweeps");
    ratio_config_opt->excludes(ratio_family_opt);

    // verify-theorems
    auto* verify = app.add_subcommand("verify-theorems",
                                      "check the bundled competitive bounds over desk-scale ranges");
    std::vector<std::string> verify_ids;
    int verify_n_lo = 0, verify_n_hi = 0, verify_budget_edges = 24;
    double verify_budget_seconds = 0;
    verify->add_option("--theorem", verify_ids,
                       "bound ids to run (default: all of T1-line T1-tree T1-star "
                       "T2-cycle T3-wheel T4-complete)");
    verify->add_option("--n-lo", verify_n_lo, "range start (single --theorem only)");
    verify->add_option("--n-hi", verify_n_hi, "range end (single --theorem only)");
    verify->add_option("--budget-edges", verify_budget_edges,
                       "exact-search edge budget (default 24, sized for the default ranges)");
    verify->add_option("--budget-seconds", verify_budget_seconds, "exact-search time budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        if (*gen) {
            FamilyTag tag = tag_from_flags(gen_family, gen_n, gen_p, gen_q);
            EdgeStream stream = make_stream(tag, order_from_flag(gen_order), gen_seed);
            std::ofstream file;
            write_edge_list(open_out(file, gen_out), stream);
            return 0;
        }
        if (*color) return run_color(color_input, color_out);
        if (*rc) {
            EdgeStream stream = stream_from_input(rc_input);
            Graph g = stream.build_graph();
            SearchBudget budget{rc_budget_edges, std::nullopt};
            if (rc_budget_seconds > 0) budget.max_seconds = rc_budget_seconds;
            RcResult result = rc_exact(g, budget);
            std::cout << rc_result_json(g, result).dump() << "\n";
            return 0;
        }
        if (*check) {
            EdgeStream stream = stream_from_file(check_graph);
            if (stream.size() == 0) fail(Errc::EmptyStream, "graph file has no edges");
            Graph g = stream.build_graph();
            Coloring coloring = coloring_from_json_file(check_coloring, g);
            auto failure = first_rainbow_failure(g, coloring);
            OrderedJson doc;
            doc["pass"] = !failure.has_value();
            if (failure)
                doc["pair"] = OrderedJson::array({g.label(failure->first), g.label(failure->second)});
            std::cout << doc.dump() << "\n";
            return 0;
        }
        if (*ratio) {
            if (!ratio_config.empty()) {
                SweepConfig config = parse_sweep_config_file(ratio_config);
                if (!ratio_out.empty()) config.out = ratio_out;
                std::vector<RatioReport> rows = sweep(config);
                std::ofstream file;
                write_report_csv(open_out(file, config.out), rows);
                return 0;
            }
            if (ratio_family.empty())
                fail(Errc::ConfigError, "ratio needs either --config or --family");
            FamilyTag tag = tag_from_flags(ratio_family, ratio_n, ratio_p, ratio_q);
            InstanceOptions opts;
            opts.oracle = oracle_from_flag(ratio_oracle);
            opts.budget.max_edges = ratio_budget_edges;
            if (ratio_budget_seconds > 0) opts.budget.max_seconds = ratio_budget_seconds;
            EdgeStream stream = make_stream(tag, order_from_flag(ratio_order), ratio_seed);
            RatioReport report = run_instance(stream, opts);
            std::cout << report_json(report).dump(2) << "\n";
            return 0;
        }
        if (*verify) {
            std::vector<const TheoremSpec*> specs;
            if (verify_ids.empty()) {
                for (const TheoremSpec& spec : theorem_table()) specs.push_back(&spec);
            } else {
                for (const std::string& id : verify_ids) {
                    const TheoremSpec* spec = find_theorem(id);
                    if (!spec) fail(Errc::BadParameters, "unknown theorem id '" + id + "'");
                    specs.push_back(spec);
                }
            }
            if ((verify_n_lo || verify_n_hi) && specs.size() != 1)
                fail(Errc::BadParameters, "--n-lo/--n-hi need exactly one --theorem");

            InstanceOptions opts;
            opts.budget.max_edges = verify_budget_edges;
            if (verify_budget_seconds > 0) opts.budget.max_seconds = verify_budget_seconds;

            bool all_pass = true;
            std::vector<RatioReport> rows;
            for (const TheoremSpec* spec : specs) {
                int lo = verify_n_lo ? verify_n_lo : spec->n_lo;
                int hi = verify_n_hi ? verify_n_hi : spec->n_hi;
                TheoremRun run = verify_theorem(*spec, lo, hi, opts);
                all_pass = all_pass && run.pass;
                rows.insert(rows.end(), run.rows.begin(), run.rows.end());
            }
            write_report_csv(std::cout, rows, /*with_theorem_column=*/true);
            std::cout << "# overall: " << (all_pass ? "PASS" : "FAIL") << "\n";
            return all_pass ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << e.formatted() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: code=Internal msg=\"" << e.what() << "\"\n";
        return 1;
    }
    return 0;
}
