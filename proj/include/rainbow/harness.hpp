// harness.hpp — competitive-analysis experiments: replay a stream through the
// online colorer, obtain the offline optimum from the exact solver or a closed
// form, and compare as exact rationals. Nothing in the pass/fail path touches
// floating point.
#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/generators.hpp"
#include "rainbow/oracle.hpp"

namespace rainbow {

using Ratio = boost::rational<long long>;

enum class OracleMode { Exact, ClosedForm, Skip };

std::string_view oracle_mode_name(OracleMode m);
std::optional<OracleMode> oracle_mode_from_name(std::string_view name);

struct RatioReport {
    std::string family;   // family name, or the input path for file streams
    int n = 0;            // vertex count
    std::string params;   // "n=5" or "p=2;q=3"
    std::string order;    // adversarial | random | natural | file
    std::optional<std::uint32_t> seed;
    int colors_online = 0;
    std::optional<int> rc;
    std::string rc_mode;  // exact | closed | skip
    std::optional<Ratio> ratio; // colors_online / rc
    std::string theorem_id;     // bound source, empty when none applies
    std::optional<Ratio> bound;
    std::optional<bool> within_bound;
    bool rainbow_valid = false;
};

// Known worst-case competitive bounds. `n_valid_min` is where the bound
// statement starts holding; n_lo..n_hi is the desk-scale range the bundled
// verification sweeps.
struct TheoremSpec {
    std::string id; // T1-line, T1-tree, T1-star, T2-cycle, T3-wheel, T4-complete
    Family family = Family::Path;
    int n_valid_min = 2;
    int n_lo = 2;
    int n_hi = 10;

    Ratio bound(int n) const;
};

const std::vector<TheoremSpec>& theorem_table();
const TheoremSpec* find_theorem(std::string_view id);

// The bound that applies to an instance of this family at this n, if any.
const TheoremSpec* applicable_theorem(Family family, int n);

struct InstanceOptions {
    OracleMode oracle = OracleMode::Exact;
    SearchBudget budget{};
};

// One experiment: online colors, offline optimum, exact ratio, bound check,
// rainbow validation. Oracle failures propagate; OracleMode::Skip (or a
// missing closed form) yields a report with an absent ratio.
RatioReport run_instance(const EdgeStream& stream, const InstanceOptions& opts = {});

struct TheoremRun {
    std::vector<RatioReport> rows;
    bool pass = false; // all within bound and rainbow-valid
};

// Adversarial-order instance per n in [n_lo, n_hi]; BadParameters when the
// range leaves the bound's validity, BudgetExceeded for oversized n.
TheoremRun verify_theorem(const TheoremSpec& spec, int n_lo, int n_hi,
                          const InstanceOptions& opts = {});

struct SweepConfig {
    std::vector<Family> families;
    std::vector<int> ns;
    std::vector<std::pair<int, int>> pqs; // complete_bipartite instances
    std::vector<OrderStrategy> orders;
    std::vector<std::uint32_t> seeds;
    OracleMode oracle = OracleMode::Exact;
    SearchBudget budget{};
    std::string out; // empty = stdout
};

// Flat key = value text: families, n, pq, orders, seeds, oracle,
// budget_edges, budget_seconds, out. Throws ConfigError naming the field.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig parse_sweep_config_file(const std::string& path);

// One row per instance, rows in the documented deterministic order:
// family -> n (or p:q) -> order -> seed. Seeds multiply only instances with a
// random ingredient (random order or tree family).
std::vector<RatioReport> sweep(const SweepConfig& config);

// CSV with the fixed column set
// family,n,params,order,seed,colors_online,rc,ratio_num,ratio_den,
// bound_num,bound_den,within_bound,rainbow_valid
// preceded by a `theorem` column when with_theorem_column is set.
void write_report_csv(std::ostream& out, const std::vector<RatioReport>& rows,
                      bool with_theorem_column = false);

} // namespace rainbow
