// bwb: command-line front end to the Bernstein workbench.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "bernstein/acceptance.hpp"
#include "bernstein/discontinuity.hpp"
#include "bernstein/errors.hpp"
#include "bernstein/gallery_json.hpp"
#include "bernstein/report_io.hpp"
#include "bernstein/variation.hpp"

namespace {

using namespace bernstein;

enum Exit { kOk = 0, kUsage = 1, kNotConverged = 2, kInconclusive = 3, kCapacity = 4 };

std::string quote(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += (c == '\n' || c == '\r') ? ' ' : c;
  }
  return out;
}

int diagnose(std::string_view kind, std::string_view message, int code) {
  std::cerr << "error: kind=" << kind << " message=\"" << quote(message) << "\"\n";
  return code;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Options shared by the subcommands; empty strings mean "not given".
struct Common {
  std::string preset;
  std::string function_file;
  std::string config_file;
  std::string mode;
  std::string schedule;
  std::string tol;
  std::string output;
  std::string grid;
  std::string out_file;
  std::optional<std::uint64_t> seed;
};

void add_function_options(CLI::App* cmd, Common& c) {
  auto* p = cmd->add_option("--preset", c.preset, "Named gallery function")
                ->check(CLI::IsMember(preset_names()));
  auto* f = cmd->add_option("--function", c.function_file, "Gallery function JSON file");
  p->excludes(f);
}

void add_run_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config_file, "RunConfig JSON file");
  cmd->add_option("--mode", c.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--schedule", c.schedule, "Degrees, e.g. 16,32,64 or 2^4..2^12");
  cmd->add_option("--tol", c.tol, "Tolerance as p/q (decimals allowed in float mode)");
  cmd->add_option("--output", c.output, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--grid", c.grid, "Uniform point count or comma-separated p/q list");
  cmd->add_option("--seed", c.seed, "Seed for randomized sweeps");
  cmd->add_option("--out", c.out_file, "Write the report to this file instead of stdout");
}

RunConfig resolve_config(const Common& c) {
  RunConfig cfg = c.config_file.empty() ? RunConfig{} : parse_run_config(read_file(c.config_file));
  if (!c.mode.empty()) cfg.mode = c.mode == "float" ? Mode::Float : Mode::Exact;
  if (!c.schedule.empty()) cfg.schedule = parse_schedule(c.schedule);
  if (!c.tol.empty()) cfg.tol = parse_tolerance(c.tol, cfg.mode);
  if (!c.output.empty()) cfg.output = c.output == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (!c.grid.empty()) {
    if (c.grid.find_first_of("/,") == std::string::npos) {
      cfg.grid = GridSpec{static_cast<std::size_t>(parse_count(c.grid)), {}};
    } else {
      GridSpec g;
      std::stringstream ss(c.grid);
      for (std::string item; std::getline(ss, item, ',');) g.points.push_back(Rational::parse(item));
      cfg.grid = std::move(g);
    }
  }
  if (c.seed) cfg.seed = *c.seed;
  cfg.validate();
  return cfg;
}

GalleryFn resolve_function(const Common& c) {
  if (!c.function_file.empty()) return gallery_from_json(read_file(c.function_file));
  if (!c.preset.empty()) return preset(c.preset);
  throw DomainError("one of --preset or --function is required");
}

void emit(const Common& c, const std::string& text) {
  if (c.out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.out_file, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + c.out_file + "'");
  out << text;
}

std::vector<Rational> parse_points(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(Rational::parse(item));
  }
  return out;
}

int cmd_approx(const Common& c, const std::string& x0_text, const std::string& target_rule) {
  const RunConfig cfg = resolve_config(c);
  const GalleryFn f = resolve_function(c);
  const Rational x0 = Rational::parse(x0_text);
  std::optional<Target> target;
  if (target_rule == "value") target = Target{eval(f, x0), TargetKind::FunctionValue};
  const ConvergenceReport r = converge_report(f, x0, cfg.effective_schedule(), cfg.tol, cfg.mode, target);
  emit(c, cfg.output == OutputFormat::Json ? report_json(r) : report_csv(r));
  switch (r.verdict.kind) {
    case Verdict::Kind::Converged:
      return kOk;
    case Verdict::Kind::NotConverged:
      return kNotConverged;
    case Verdict::Kind::Inconclusive:
      break;
  }
  return kInconclusive;
}

int cmd_analyze(const Common& c, unsigned k_max) {
  const RunConfig cfg = resolve_config(c);
  const GalleryFn f = resolve_function(c);
  Analysis a;
  a.function_type = std::string(f.type_name());
  a.classification = classify(f);
  std::set<Rational> pts;
  for (const auto& x : cfg.grid.materialize()) pts.insert(x);
  for (const auto& x : singular_points(f)) pts.insert(x);
  const std::vector<Rational> nodes(pts.begin(), pts.end());
  if (!f.dirichlet()) {
    for (unsigned k = 0; k <= k_max; ++k) a.jump_sets.push_back(jump_set(f, k));
  }
  bool own = true;
  for (const auto& x : nodes) {
    const Rational o = oscillation_point(f, x);
    own = own && o == eval(f, x);
    a.oscillation.emplace_back(x, o);
  }
  if (!f.dirichlet()) a.own_oscillation = own;
  a.variation = variation_profile(f, nodes);
  emit(c, cfg.output == OutputFormat::Json ? analysis_json(a) : analysis_csv(a));
  return kOk;
}

int cmd_probe(const Common& c, const std::string& xs_text) {
  const RunConfig cfg = resolve_config(c);
  const GalleryFn f = resolve_function(c);
  const std::vector<Rational> xs = xs_text.empty() ? cfg.grid.materialize() : parse_points(xs_text);
  const auto probes = b_set_sweep(f, xs, cfg.effective_schedule(), cfg.tol, cfg.mode);
  emit(c, cfg.output == OutputFormat::Json ? probe_json(probes, cfg.mode) : probe_csv(probes, cfg.mode));
  return kOk;
}

int cmd_verify(const Common& c, const std::string& cap_text, bool timing) {
  AcceptanceOptions opts;
  RunConfig cfg = c.config_file.empty() ? RunConfig{} : parse_run_config(read_file(c.config_file));
  if (!c.config_file.empty()) opts.mode = cfg.mode;
  if (!c.mode.empty()) opts.mode = c.mode == "float" ? Mode::Float : Mode::Exact;
  if (c.seed) {
    opts.seed = *c.seed;
  } else if (!c.config_file.empty()) {
    opts.seed = cfg.seed;
  }
  if (!cap_text.empty()) opts.schedule_cap = static_cast<std::size_t>(parse_count(cap_text));
  const auto results = run_acceptance(opts);
  emit(c, render_acceptance(results, timing));
  return acceptance_passed(results, opts.schedule_cap.has_value()) ? kOk : kNotConverged;
}

int cmd_gallery(const Common& c, bool list) {
  if (list) {
    std::string text;
    for (const auto& n : preset_names()) text += n + "\n";
    emit(c, text);
    return kOk;
  }
  emit(c, to_json(resolve_function(c)) + "\n");
  return kOk;
}

int cmd_jordan(const Common& c) {
  const GalleryFn f = resolve_function(c);
  const auto [g, h] = jordan_decompose(f);
  emit(c, "{\n\"g\": " + to_json(g) + ",\n\"h\": " + to_json(h) + "\n}\n");
  return kOk;
}

int cmd_cover(const Common& c, const std::string& sets_text, const std::string& eps_text) {
  std::vector<std::vector<Rational>> sets;
  std::stringstream ss(sets_text);
  for (std::string item; std::getline(ss, item, ';');) sets.push_back(parse_points(item));
  const Rational eps = Rational::parse(eps_text);
  const IntervalCover cov = sets.size() == 1 ? cover(sets[0], eps) : cover_union(sets, eps);
  emit(c, cover_json(cov));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bernstein polynomial workbench"};
  app.require_subcommand(1);
  Common c;

  std::string x0, target_rule = "auto";
  auto* approx = app.add_subcommand("approx", "Bernstein trajectory at one point");
  add_function_options(approx, c);
  add_run_options(approx, c);
  approx->add_option("--x0", x0, "Evaluation point p/q")->required();
  approx->add_option("--target", target_rule, "auto (limit law) or value (f(x0))")
      ->check(CLI::IsMember({"auto", "value"}));

  unsigned k_max = 6;
  auto* analyze = app.add_subcommand("analyze", "Classification, jump sets, oscillation and variation");
  add_function_options(analyze, c);
  add_run_options(analyze, c);
  analyze->add_option("--k-max", k_max, "Largest jump-set exponent");

  std::string xs;
  auto* probe = app.add_subcommand("probe", "B_f membership sweep");
  add_function_options(probe, c);
  add_run_options(probe, c);
  probe->add_option("--x", xs, "Comma-separated points (default: the grid)");

  std::string cap;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  add_run_options(verify, c);
  verify->add_option("--schedule-cap", cap, "Largest degree, e.g. 2^10");
  verify->add_flag("--timing", timing, "Append per-criterion timings");

  bool list = false;
  auto* gallery = app.add_subcommand("gallery", "List presets or print a function as JSON");
  add_function_options(gallery, c);
  gallery->add_flag("--list", list, "List preset names");
  gallery->add_option("--out", c.out_file, "Output file");

  auto* jordan = app.add_subcommand("jordan", "Jordan decomposition f = g - h");
  add_function_options(jordan, c);
  jordan->add_option("--out", c.out_file, "Output file");

  std::string sets, eps;
  auto* cov = app.add_subcommand("cover", "Measure-zero interval cover");
  cov->add_option("--points", sets, "Points p/q separated by ',', sets separated by ';'")->required();
  cov->add_option("--eps", eps, "Total length budget p/q")->required();
  cov->add_option("--out", c.out_file, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return diagnose("usage", e.what(), kUsage);
  }

  try {
    if (*approx) return cmd_approx(c, x0, target_rule);
    if (*analyze) return cmd_analyze(c, k_max);
    if (*probe) return cmd_probe(c, xs);
    if (*verify) return cmd_verify(c, cap, timing);
    if (*gallery) return cmd_gallery(c, list);
    if (*jordan) return cmd_jordan(c);
    if (*cov) return cmd_cover(c, sets, eps);
  } catch (const CapacityError& e) {
    return diagnose(e.kind(), e.what(), kCapacity);
  } catch (const InconclusiveError& e) {
    return diagnose(e.kind(), e.what(), kInconclusive);
  } catch (const Error& e) {
    return diagnose(e.kind(), e.what(), kUsage);
  } catch (const std::exception& e) {
    return diagnose("internal", e.what(), kUsage);
  }
  return kUsage;
}
