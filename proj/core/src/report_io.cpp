#include "bernstein/report_io.hpp"

#include <charconv>
#include <json.hpp>
#include <limits>
#include <sstream>

#include "bernstein/errors.hpp"

namespace bernstein {
namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j, int indent) { return j.dump(indent) + "\n"; }

// Float-mode quantities came from doubles, so print them as such.
std::string scalar_text(const Rational& r, Mode mode) {
  return mode == Mode::Float ? format_double(r.to_double()) : r.str();
}

Json scalar_json(const Rational& r, Mode mode) {
  if (mode == Mode::Float) return r.to_double();
  return r.str();
}

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

Json opt_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json class_to_json(const ClassReport& c) {
  Json j;
  j["regulated"] = opt_bool(c.regulated);
  j["cadlag"] = opt_bool(c.cadlag);
  j["u0"] = opt_bool(c.u0);
  j["monotone"] = opt_bool(c.monotone);
  j["lsco"] = opt_bool(c.lsco);
  j["usco"] = opt_bool(c.usco);
  j["cliquish"] = opt_bool(c.cliquish);
  j["locally_bounded"] = opt_bool(c.locally_bounded);
  j["cliquish_witness"] = c.cliquish_witness ? Json(c.cliquish_witness->str()) : Json(nullptr);
  Json bv;
  bv["kind"] = bv_kind_name(c.bv.kind);
  bv["variation"] = c.bv.variation ? Json(c.bv.variation->str()) : Json(nullptr);
  bv["exact"] = c.bv.exact;
  j["bv"] = std::move(bv);
  return j;
}

Json jump_to_json(const JumpSet& s) {
  Json j;
  j["k"] = s.k;
  j["points"] = rationals(s.points);
  j["bounded_depth"] = s.bounded_depth;
  return j;
}

Json variation_to_json(const VariationProfile& p) {
  Json j;
  j["flag"] = variation_flag_name(p.flag);
  j["nodes"] = rationals(p.nodes);
  j["cumulative"] = rationals(p.cumulative);
  return j;
}

Rational tol_from_json(const Json& j, Mode mode) {
  if (j.is_string()) return parse_tolerance(j.get<std::string>(), mode);
  if (j.is_number()) {
    if (mode == Mode::Exact) throw ParseError("tol must be a \"p/q\" string in exact mode");
    return Rational::from_double(j.get<double>());
  }
  throw ParseError("tol must be a string or a number");
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string_view mode_name(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

std::string_view target_kind_name(TargetKind k) {
  return k == TargetKind::FunctionValue ? "FunctionValue" : "JumpMidpoint";
}

std::string_view verdict_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Converged:
      return "Converged";
    case Verdict::Kind::NotConverged:
      return "NotConverged";
    case Verdict::Kind::Inconclusive:
      break;
  }
  return "Inconclusive";
}

std::string_view probe_verdict_name(BProbeVerdict v) {
  switch (v) {
    case BProbeVerdict::InBf:
      return "InBf";
    case BProbeVerdict::NotInBf:
      return "NotInBf";
    case BProbeVerdict::Inconclusive:
      break;
  }
  return "Inconclusive";
}

std::string_view variation_flag_name(VariationFlag f) { return f == VariationFlag::Exact ? "Exact" : "LowerBound"; }

std::string_view bv_kind_name(BvVerdict::Kind k) {
  switch (k) {
    case BvVerdict::Kind::Bounded:
      return "Bounded";
    case BvVerdict::Kind::Unbounded:
      return "Unbounded";
    case BvVerdict::Kind::UnknownAtTruncation:
      return "UnknownAtTruncation";
    case BvVerdict::Kind::NotApplicable:
      break;
  }
  return "NotApplicable";
}

std::string report_csv(const ConvergenceReport& r) {
  std::ostringstream os;
  os << "n,value,target,error,mode\n";
  for (std::size_t i = 0; i < r.schedule.size(); ++i) {
    os << r.schedule[i] << ',' << scalar_text(r.values[i], r.mode) << ',' << r.target.value.str() << ','
       << scalar_text(r.errors[i], r.mode) << ',' << mode_name(r.mode) << '\n';
  }
  return os.str();
}

std::string report_json(const ConvergenceReport& r, int indent) {
  Json j;
  j["x0"] = r.x0.str();
  j["mode"] = mode_name(r.mode);
  j["target"] = {{"value", r.target.value.str()}, {"kind", target_kind_name(r.target.kind)}};
  j["tol"] = r.tol.str();
  j["schedule"] = r.schedule;
  Json values = Json::array(), errors = Json::array();
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    values.push_back(scalar_json(r.values[i], r.mode));
    errors.push_back(scalar_json(r.errors[i], r.mode));
  }
  j["values"] = std::move(values);
  j["errors"] = std::move(errors);
  Json v;
  v["kind"] = verdict_name(r.verdict.kind);
  v["at_n"] = r.verdict.at_n ? Json(*r.verdict.at_n) : Json(nullptr);
  j["verdict"] = std::move(v);
  return dump(j, indent);
}

std::string variation_csv(const VariationProfile& p) {
  std::ostringstream os;
  os << "node,cumulative,flag\n";
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    os << p.nodes[i].str() << ',' << p.cumulative[i].str() << ',' << variation_flag_name(p.flag) << '\n';
  }
  return os.str();
}

std::string variation_json(const VariationProfile& p, int indent) { return dump(variation_to_json(p), indent); }

std::string jump_set_json(const JumpSet& s, int indent) { return dump(jump_to_json(s), indent); }

std::string cover_json(const IntervalCover& c, int indent) {
  Json j;
  Json ivs = Json::array();
  for (const auto& [a, b] : c.intervals) ivs.push_back(Json::array({a.str(), b.str()}));
  j["intervals"] = std::move(ivs);
  j["total_length"] = c.total_length.str();
  return dump(j, indent);
}

std::string classification_json(const ClassReport& c, int indent) { return dump(class_to_json(c), indent); }

std::string probe_csv(const std::vector<BProbe>& probes, Mode mode) {
  std::ostringstream os;
  os << "x,verdict,estimate,target\n";
  for (const auto& p : probes) {
    os << p.x.str() << ',' << probe_verdict_name(p.verdict) << ',' << scalar_text(p.estimate, mode) << ','
       << p.target.str() << '\n';
  }
  return os.str();
}

std::string probe_json(const std::vector<BProbe>& probes, Mode mode, int indent) {
  Json arr = Json::array();
  for (const auto& p : probes) {
    arr.push_back({{"x", p.x.str()},
                   {"verdict", probe_verdict_name(p.verdict)},
                   {"estimate", scalar_json(p.estimate, mode)},
                   {"target", p.target.str()}});
  }
  return dump(arr, indent);
}

std::string analysis_json(const Analysis& a, int indent) {
  Json j;
  j["type"] = a.function_type;
  j["classification"] = class_to_json(a.classification);
  Json jumps = Json::array();
  for (const auto& s : a.jump_sets) jumps.push_back(jump_to_json(s));
  j["jump_sets"] = std::move(jumps);
  Json osc = Json::array();
  for (const auto& [x, o] : a.oscillation) osc.push_back({{"x", x.str()}, {"oscillation", o.str()}});
  j["oscillation"] = std::move(osc);
  j["own_oscillation"] = opt_bool(a.own_oscillation);
  j["variation"] = a.variation ? variation_to_json(*a.variation) : Json(nullptr);
  return dump(j, indent);
}

std::string analysis_csv(const Analysis& a) {
  std::ostringstream os;
  const ClassReport& c = a.classification;
  auto flag = [](const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "n/a"; };
  os << "# classification\nproperty,value\n";
  os << "type," << a.function_type << '\n';
  os << "regulated," << flag(c.regulated) << "\ncadlag," << flag(c.cadlag) << "\nu0," << flag(c.u0)
     << "\nmonotone," << flag(c.monotone) << "\nlsco," << flag(c.lsco) << "\nusco," << flag(c.usco)
     << "\ncliquish," << flag(c.cliquish) << "\nlocally_bounded," << flag(c.locally_bounded) << '\n';
  os << "bv," << bv_kind_name(c.bv.kind) << '\n';
  os << "variation," << (c.bv.variation ? c.bv.variation->str() : "n/a") << '\n';
  os << "own_oscillation," << flag(a.own_oscillation) << '\n';
  os << "# jump_sets\nk,points,bounded_depth\n";
  for (const auto& s : a.jump_sets) {
    os << s.k << ',';
    for (std::size_t i = 0; i < s.points.size(); ++i) os << (i ? " " : "") << s.points[i].str();
    os << ',' << (s.bounded_depth ? "true" : "false") << '\n';
  }
  os << "# oscillation\nx,oscillation\n";
  for (const auto& [x, o] : a.oscillation) os << x.str() << ',' << o.str() << '\n';
  if (a.variation) os << "# variation\n" << variation_csv(*a.variation);
  return os.str();
}

std::vector<Rational> GridSpec::materialize() const {
  if (uniform_count) return uniform_grid(*uniform_count);
  return points;
}

std::vector<std::size_t> RunConfig::effective_schedule() const {
  return schedule.empty() ? default_schedule(mode) : schedule;
}

void RunConfig::validate() const {
  if (!schedule.empty()) validate_schedule(schedule);
  if (tol.sign() <= 0) throw DomainError("tol must be positive");
  if (grid.uniform_count && *grid.uniform_count < 2) throw DomainError("uniform grid count must be at least 2");
  if (!grid.uniform_count && grid.points.empty()) throw DomainError("explicit grid must not be empty");
  for (const auto& x : grid.points) {
    if (x.sign() < 0 || x > Rational(1)) throw DomainError("grid point " + x.str() + " lies outside [0,1]");
  }
}

std::vector<std::size_t> parse_schedule(std::string_view text) {
  std::vector<std::size_t> out;
  auto to_size = [](std::string_view t) {
    const std::uint64_t v = parse_count(t);
    if (v > std::numeric_limits<std::size_t>::max()) throw ParseError("schedule entry too large");
    return static_cast<std::size_t>(v);
  };
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const std::size_t lo = to_size(text.substr(0, dots));
    const std::size_t hi = to_size(text.substr(dots + 2));
    if (lo < 1 || hi < lo) throw ParseError("schedule range must satisfy 1 <= lo <= hi");
    for (std::size_t n = lo; n <= hi; n *= 2) {
      out.push_back(n);
      if (n > hi / 2) break;
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view part = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(to_size(part));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Rational parse_tolerance(std::string_view text, Mode mode) {
  if (text.find_first_of(".eE") != std::string_view::npos) {
    if (mode == Mode::Exact) throw ParseError("decimal tolerance '" + std::string(text) + "' needs float mode; use p/q");
    double v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
      throw ParseError("malformed tolerance '" + std::string(text) + "'");
    }
    return Rational::from_double(v);
  }
  return Rational::parse(text);
}

RunConfig parse_run_config(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  RunConfig c;
  try {
    if (j.contains("mode")) {
      const std::string m = j["mode"].get<std::string>();
      if (m == "exact") {
        c.mode = Mode::Exact;
      } else if (m == "float") {
        c.mode = Mode::Float;
      } else {
        throw ParseError("mode must be \"exact\" or \"float\"");
      }
    }
    if (j.contains("schedule")) {
      for (const auto& e : j["schedule"]) {
        if (e.is_string()) {
          c.schedule.push_back(static_cast<std::size_t>(parse_count(e.get<std::string>())));
        } else {
          c.schedule.push_back(e.get<std::size_t>());
        }
      }
    }
    if (j.contains("grid")) {
      const Json& g = j["grid"];
      if (g.contains("uniform")) {
        c.grid = GridSpec{g["uniform"].get<std::size_t>(), {}};
      } else if (g.contains("explicit")) {
        GridSpec spec;
        for (const auto& e : g["explicit"]) spec.points.push_back(Rational::parse(e.get<std::string>()));
        c.grid = std::move(spec);
      } else {
        throw ParseError("grid needs \"uniform\" or \"explicit\"");
      }
    }
    if (j.contains("tol")) c.tol = tol_from_json(j["tol"], c.mode);
    if (j.contains("output")) {
      const std::string o = j["output"].get<std::string>();
      if (o == "csv") {
        c.output = OutputFormat::Csv;
      } else if (o == "json") {
        c.output = OutputFormat::Json;
      } else {
        throw ParseError("output must be \"csv\" or \"json\"");
      }
    }
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config field has the wrong type: ") + e.what());
  }
  c.validate();
  return c;
}

}  // namespace bernstein
