#include "bernstein/gallery_json.hpp"

#include <json.hpp>

#include "bernstein/errors.hpp"

namespace bernstein {
namespace {

using Json = nlohmann::ordered_json;

Json rationals_to_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& r : v) arr.push_back(r.str());
  return arr;
}

Json encode(const GalleryFn& f);

Json encode_piecewise(const PiecewiseFn& p) {
  Json j;
  j["type"] = "piecewise";
  j["breakpoints"] = rationals_to_json(p.breakpoints());
  Json pieces = Json::array();
  for (const auto& poly : p.pieces()) pieces.push_back(rationals_to_json(poly.coefficients()));
  j["pieces"] = std::move(pieces);
  Json data = Json::array();
  for (const auto& d : p.point_data()) {
    Json e;
    e["value"] = d.value.str();
    if (d.left_limit) e["left_limit"] = d.left_limit->str();
    if (d.right_limit) e["right_limit"] = d.right_limit->str();
    data.push_back(std::move(e));
  }
  j["point_data"] = std::move(data);
  return j;
}

Json encode_thomae(const ThomaeFn& t) {
  Json j;
  j["type"] = "thomae";
  j["support"] = rationals_to_json(t.support().points());
  j["heights"] = t.support().heights();
  j["truncation_depth"] = t.support().truncation_depth();
  Json rule;
  if (t.rule().kind() == WeightRule::Kind::Geometric) {
    rule["kind"] = "geometric";
  } else {
    rule["kind"] = "rescaled";
    rule["g0"] = t.rule().g0();
  }
  j["weight_rule"] = std::move(rule);
  j["level_rule"] = t.level_rule() == LevelRule::Height ? "height" : "least-above";
  return j;
}

Json encode(const GalleryFn& f) {
  if (const auto* p = f.piecewise()) return encode_piecewise(*p);
  if (const auto* t = f.thomae()) return encode_thomae(*t);
  if (const auto* d = f.dirichlet()) {
    Json j;
    j["type"] = "dirichlet";
    j["designated"] = rationals_to_json(d->designated());
    return j;
  }
  const auto& c = *f.combination();
  Json j;
  j["type"] = "combination";
  j["lhs_coeff"] = c.lhs_coeff.str();
  j["lhs"] = encode(*c.lhs);
  j["rhs_coeff"] = c.rhs_coeff.str();
  j["rhs"] = encode(*c.rhs);
  return j;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Rational rational_of(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rationals must be \"p/q\" strings, got " + j.dump());
}

std::vector<Rational> rationals_of(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_of(e));
  return out;
}

GalleryFn decode(const Json& j);

GalleryFn decode_piecewise(const Json& j) {
  std::vector<Rational> bps = rationals_of(field(j, "breakpoints"));
  std::vector<Polynomial> pieces;
  for (const auto& p : field(j, "pieces")) pieces.emplace_back(rationals_of(p));
  const Json& data = field(j, "point_data");
  if (!data.is_array()) throw ParseError("point_data must be an array");
  bool any_limits = false;
  for (const auto& d : data) any_limits = any_limits || d.contains("left_limit") || d.contains("right_limit");
  if (!any_limits) {
    std::vector<Rational> values;
    for (const auto& d : data) values.push_back(rational_of(field(d, "value")));
    return PiecewiseFn::create(std::move(bps), std::move(pieces), std::move(values));
  }
  std::vector<BreakpointData> records;
  for (const auto& d : data) {
    BreakpointData rec{rational_of(field(d, "value")), std::nullopt, std::nullopt};
    if (d.contains("left_limit")) rec.left_limit = rational_of(d.at("left_limit"));
    if (d.contains("right_limit")) rec.right_limit = rational_of(d.at("right_limit"));
    records.push_back(std::move(rec));
  }
  return PiecewiseFn::from_parts(std::move(bps), std::move(pieces), std::move(records));
}

GalleryFn decode_thomae(const Json& j) {
  std::vector<Rational> pts = rationals_of(field(j, "support"));
  const Json& hj = field(j, "heights");
  if (!hj.is_array()) throw ParseError("heights must be an array");
  std::vector<std::uint32_t> heights;
  for (const auto& h : hj) {
    if (!h.is_number_unsigned()) throw ParseError("heights must be natural numbers");
    heights.push_back(h.get<std::uint32_t>());
  }
  std::optional<std::uint32_t> depth;
  if (j.contains("truncation_depth")) depth = j.at("truncation_depth").get<std::uint32_t>();
  WeightRule rule = WeightRule::geometric();
  if (j.contains("weight_rule")) {
    const std::string kind = field(j.at("weight_rule"), "kind").get<std::string>();
    if (kind == "rescaled") {
      rule = WeightRule::rescaled(field(j.at("weight_rule"), "g0").get<std::vector<std::uint64_t>>());
    } else if (kind != "geometric") {
      throw ParseError("unknown weight_rule kind '" + kind + "'");
    }
  }
  LevelRule level = LevelRule::Height;
  if (j.contains("level_rule")) {
    const std::string lr = j.at("level_rule").get<std::string>();
    if (lr == "least-above") {
      level = LevelRule::LeastAbove;
    } else if (lr != "height") {
      throw ParseError("unknown level_rule '" + lr + "'");
    }
  }
  return ThomaeFn(HeightedSet(std::move(pts), std::move(heights), depth), std::move(rule), level);
}

GalleryFn decode(const Json& j) {
  const std::string type = field(j, "type").get<std::string>();
  if (type == "piecewise") return decode_piecewise(j);
  if (type == "thomae") return decode_thomae(j);
  if (type == "dirichlet") return DirichletFn(rationals_of(field(j, "designated")));
  if (type == "combination") {
    return linear_combination(rational_of(field(j, "lhs_coeff")), decode(field(j, "lhs")),
                              rational_of(field(j, "rhs_coeff")), decode(field(j, "rhs")));
  }
  throw ParseError("unknown function type '" + type + "'");
}

}  // namespace

std::string to_json(const GalleryFn& f, int indent) { return encode(f).dump(indent); }

GalleryFn gallery_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return decode(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed function document: ") + e.what());
  }
}

}  // namespace bernstein
