#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bernstein/discontinuity.hpp"
#include "bernstein/engine.hpp"
#include "bernstein/variation.hpp"

namespace bernstein {

/// Shortest decimal that reads back to the same double.
std::string format_double(double v);

std::string_view mode_name(Mode m);
std::string_view target_kind_name(TargetKind k);
std::string_view verdict_name(Verdict::Kind k);
std::string_view probe_verdict_name(BProbeVerdict v);
std::string_view variation_flag_name(VariationFlag f);
std::string_view bv_kind_name(BvVerdict::Kind k);

/// Columns n,value,target,error,mode. Float-mode values and errors are
/// written as decimals, everything else as p/q.
std::string report_csv(const ConvergenceReport& r);
std::string report_json(const ConvergenceReport& r, int indent = 2);

/// Columns node,cumulative,flag.
std::string variation_csv(const VariationProfile& p);
std::string variation_json(const VariationProfile& p, int indent = 2);

std::string jump_set_json(const JumpSet& j, int indent = 2);
std::string cover_json(const IntervalCover& c, int indent = 2);
std::string classification_json(const ClassReport& c, int indent = 2);

/// Columns x,verdict,estimate,target.
std::string probe_csv(const std::vector<BProbe>& probes, Mode mode);
std::string probe_json(const std::vector<BProbe>& probes, Mode mode, int indent = 2);

/// Everything `bwb analyze` prints for one function.
struct Analysis {
  std::string function_type;
  ClassReport classification;
  std::vector<JumpSet> jump_sets;
  /// (x, oscillation_point(x)) for every singular point and grid point.
  std::vector<std::pair<Rational, Rational>> oscillation;
  /// Whether osc_f(x) = f(x) at every listed point; absent for Dirichlet.
  std::optional<bool> own_oscillation;
  std::optional<VariationProfile> variation;
};
std::string analysis_json(const Analysis& a, int indent = 2);
/// Sections separated by "# name" lines, each a CSV table.
std::string analysis_csv(const Analysis& a);

enum class OutputFormat { Csv, Json };

struct GridSpec {
  /// Either a uniform grid of `count` points or an explicit list.
  std::optional<std::size_t> uniform_count;
  std::vector<Rational> points;
  std::vector<Rational> materialize() const;
};

/// Command options shared by every subcommand, loadable from a JSON file.
struct RunConfig {
  Mode mode = Mode::Exact;
  std::vector<std::size_t> schedule;  // empty: default schedule for the mode
  GridSpec grid{std::size_t{33}, {}};
  Rational tol = Rational(1, 50);
  OutputFormat output = OutputFormat::Csv;
  std::uint64_t seed = 0;

  std::vector<std::size_t> effective_schedule() const;
  /// Throws DomainError when an invariant fails.
  void validate() const;
};

/// Fields: mode ("exact"|"float"), schedule (array of integers or "2^k"
/// strings), grid ({"uniform": count} or {"explicit": ["p/q", ...]}), tol
/// ("p/q" string or number), output ("csv"|"json"), seed. Missing fields
/// keep their defaults.
RunConfig parse_run_config(std::string_view text);
/// "16,32,2^10" or "2^4..2^12" (doubling range).
std::vector<std::size_t> parse_schedule(std::string_view text);
/// "p/q", or a decimal in float mode (converted exactly from the double).
Rational parse_tolerance(std::string_view text, Mode mode);

}  // namespace bernstein
