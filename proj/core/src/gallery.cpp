#include "bernstein/gallery.hpp"

#include <algorithm>
#include <map>

#include "bernstein/errors.hpp"

namespace bernstein {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Collapses piecewise functions and linear combinations of them into one
// piecewise function; nullopt when a Thomae or Dirichlet part is involved.
std::optional<PiecewiseFn> flatten_piecewise(const GalleryFn& f) {
  if (const auto* p = f.piecewise()) return *p;
  if (const auto* c = f.combination()) {
    auto lhs = flatten_piecewise(*c->lhs);
    auto rhs = flatten_piecewise(*c->rhs);
    if (lhs && rhs) return PiecewiseFn::combine(c->lhs_coeff, *lhs, c->rhs_coeff, *rhs);
  }
  return std::nullopt;
}

// Whether p is nondecreasing (sign = +1) or nonincreasing (sign = -1) on [a, b].
bool piece_monotone(const Polynomial& p, const Rational& a, const Rational& b, int sign) {
  std::vector<Rational> nodes{a};
  const CriticalPoints cps = critical_points(p, a, b);
  nodes.insert(nodes.end(), cps.points.begin(), cps.points.end());
  nodes.push_back(b);
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const int s = (p(nodes[i + 1]) - p(nodes[i])).sign();
    if (s != 0 && s != sign) return false;
  }
  return true;
}

bool piecewise_monotone(const PiecewiseFn& f, int sign) {
  const auto& bps = f.breakpoints();
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    if (!piece_monotone(f.pieces()[i], bps[i], bps[i + 1], sign)) return false;
  }
  for (const auto& d : f.point_data()) {
    auto ordered = [sign](const Rational& lo, const Rational& hi) { return ((hi - lo).sign() * sign) >= 0; };
    if (d.left_limit && !ordered(*d.left_limit, d.value)) return false;
    if (d.right_limit && !ordered(d.value, *d.right_limit)) return false;
  }
  return true;
}

ClassReport classify_piecewise(const PiecewiseFn& f) {
  ClassReport r;
  r.regulated = true;
  r.locally_bounded = true;
  r.cliquish = true;
  r.cliquish_witness = (f.breakpoints()[0] + f.breakpoints()[1]) / Rational(2);
  bool cadlag = true, u0 = true, usco = true, lsco = true;
  const auto& bps = f.breakpoints();
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const auto& d = f.point_data()[i];
    if (d.right_limit && d.value != *d.right_limit) cadlag = false;
    if (d.left_limit && d.right_limit) {
      const Rational& lo = min(*d.left_limit, *d.right_limit);
      const Rational& hi = max(*d.left_limit, *d.right_limit);
      if (d.value < lo || hi < d.value) u0 = false;
    }
    for (const auto* lim : {&d.left_limit, &d.right_limit}) {
      if (!lim->has_value()) continue;
      if (d.value < **lim) usco = false;
      if (**lim < d.value) lsco = false;
    }
  }
  r.cadlag = cadlag;
  r.u0 = u0;
  r.usco = usco;
  r.lsco = lsco;
  r.monotone = piecewise_monotone(f, +1) || piecewise_monotone(f, -1);
  const ExactVariation v = piecewise_variation(f, Rational(1));
  r.bv = BvVerdict{BvVerdict::Kind::Bounded, v.value, v.exact};
  return r;
}

ClassReport classify_thomae(const ThomaeFn& f) {
  ClassReport r;
  const auto& pts = f.support().points();
  const bool empty = pts.empty();
  const bool touches_zero = !empty && pts.front().is_zero();
  const bool touches_one = !empty && pts.back() == Rational(1);
  const std::size_t interior = pts.size() - (touches_zero ? 1 : 0) - (touches_one ? 1 : 0);
  r.regulated = true;
  r.locally_bounded = true;
  r.cadlag = empty || (pts.size() == 1 && touches_one);
  r.u0 = interior == 0;
  r.usco = true;
  r.lsco = empty;
  r.monotone = interior == 0 && !(touches_zero && touches_one);
  r.cliquish = true;
  // Midpoint between 0 and the first positive support point is a continuity point.
  Rational right(1);
  for (const auto& p : pts) {
    if (p.sign() > 0) {
      right = p;
      break;
    }
  }
  r.cliquish_witness = right / Rational(2);
  if (empty) {
    r.bv = BvVerdict{BvVerdict::Kind::Bounded, Rational(0), true};
  } else {
    r.bv = BvVerdict{BvVerdict::Kind::UnknownAtTruncation, thomae_truncated_variation(f, Rational(1)), true};
  }
  return r;
}

}  // namespace

std::optional<PiecewiseFn> as_piecewise(const GalleryFn& f) { return flatten_piecewise(f); }

std::string_view GalleryFn::type_name() const {
  return std::visit(overloaded{[](const PiecewiseFn&) { return std::string_view("piecewise"); },
                               [](const ThomaeFn&) { return std::string_view("thomae"); },
                               [](const DirichletFn&) { return std::string_view("dirichlet"); },
                               [](const LinearCombination&) { return std::string_view("combination"); }},
                    v_);
}

Rational eval(const GalleryFn& f, const Rational& x) {
  return std::visit(overloaded{[&](const PiecewiseFn& p) { return p.eval(x); },
                               [&](const ThomaeFn& t) { return t.eval(x); },
                               [&](const DirichletFn& d) { return d.eval(x); },
                               [&](const LinearCombination& c) {
                                 return c.lhs_coeff * eval(*c.lhs, x) + c.rhs_coeff * eval(*c.rhs, x);
                               }},
                    f.variant());
}

OneSidedLimit left_limit(const GalleryFn& f, const Rational& x0) {
  if (!(x0.sign() > 0) || x0 > Rational(1)) throw DomainError("left limit requires x0 in (0,1]");
  return std::visit(overloaded{[&](const PiecewiseFn& p) { return OneSidedLimit{p.left_limit(x0), false}; },
                               [&](const ThomaeFn&) { return OneSidedLimit{Rational(0), true}; },
                               [&](const DirichletFn&) -> OneSidedLimit {
                                 throw NotRegulatedError("Dirichlet indicator has no one-sided limits");
                               },
                               [&](const LinearCombination& c) {
                                 const auto l = left_limit(*c.lhs, x0);
                                 const auto r = left_limit(*c.rhs, x0);
                                 return OneSidedLimit{c.lhs_coeff * l.value + c.rhs_coeff * r.value,
                                                      l.construction_derived || r.construction_derived};
                               }},
                    f.variant());
}

OneSidedLimit right_limit(const GalleryFn& f, const Rational& x0) {
  if (x0.sign() < 0 || !(x0 < Rational(1))) throw DomainError("right limit requires x0 in [0,1)");
  return std::visit(overloaded{[&](const PiecewiseFn& p) { return OneSidedLimit{p.right_limit(x0), false}; },
                               [&](const ThomaeFn&) { return OneSidedLimit{Rational(0), true}; },
                               [&](const DirichletFn&) -> OneSidedLimit {
                                 throw NotRegulatedError("Dirichlet indicator has no one-sided limits");
                               },
                               [&](const LinearCombination& c) {
                                 const auto l = right_limit(*c.lhs, x0);
                                 const auto r = right_limit(*c.rhs, x0);
                                 return OneSidedLimit{c.lhs_coeff * l.value + c.rhs_coeff * r.value,
                                                      l.construction_derived || r.construction_derived};
                               }},
                    f.variant());
}

std::vector<Rational> singular_points(const GalleryFn& f) {
  std::vector<Rational> out = std::visit(
      overloaded{[](const PiecewiseFn& p) { return p.breakpoints(); },
                 [](const ThomaeFn& t) { return t.support().points(); },
                 [](const DirichletFn& d) { return d.designated(); },
                 [](const LinearCombination& c) {
                   std::vector<Rational> a = singular_points(*c.lhs);
                   const std::vector<Rational> b = singular_points(*c.rhs);
                   a.insert(a.end(), b.begin(), b.end());
                   return a;
                 }},
      f.variant());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExactVariation piecewise_variation(const PiecewiseFn& f, const Rational& y) {
  if (y.sign() < 0 || y > Rational(1)) throw DomainError("variation endpoint must lie in [0,1]");
  ExactVariation out{Rational(0), true};
  const auto& bps = f.breakpoints();
  for (std::size_t i = 0; i < bps.size() && bps[i] <= y; ++i) {
    const auto& d = f.point_data()[i];
    if (d.left_limit) out.value += abs(d.value - *d.left_limit);
    if (bps[i] < y && d.right_limit) out.value += abs(*d.right_limit - d.value);
    if (i + 1 < bps.size() && bps[i] < y) {
      const Rational hi = min(bps[i + 1], y);
      const Polynomial& p = f.pieces()[i];
      const CriticalPoints cps = critical_points(p, bps[i], hi);
      out.exact = out.exact && cps.exact;
      Rational prev = p(bps[i]);
      for (const auto& c : cps.points) {
        Rational cur = p(c);
        out.value += abs(cur - prev);
        prev = std::move(cur);
      }
      out.value += abs(p(hi) - prev);
    }
  }
  return out;
}

Rational thomae_truncated_variation(const ThomaeFn& f, const Rational& y) {
  if (y.sign() < 0 || y > Rational(1)) throw DomainError("variation endpoint must lie in [0,1]");
  Rational total;
  const auto& pts = f.support().points();
  for (std::size_t i = 0; i < pts.size() && pts[i] <= y; ++i) {
    const Rational w = f.weight_at(i);
    // Rise from the left limit (absent at 0) and fall to the right limit (absent at y).
    if (pts[i].sign() > 0) total += w;
    if (pts[i] < y) total += w;
  }
  return total;
}

ClassReport classify(const GalleryFn& f) {
  if (const auto* t = f.thomae()) return classify_thomae(*t);
  if (f.dirichlet()) {
    ClassReport r;
    r.regulated = false;
    r.bv = BvVerdict{BvVerdict::Kind::Unbounded, std::nullopt, true};
    return r;
  }
  if (auto p = flatten_piecewise(f)) return classify_piecewise(*p);
  throw DomainError("classify requires a piecewise, Thomae-type or Dirichlet function");
}

PiecewiseFn make_heaviside(const Rational& a, const Rational& v) {
  if (!(a.sign() > 0 && a < Rational(1))) throw ConstructionError("Heaviside jump must lie in (0,1)");
  return PiecewiseFn::create({Rational(0), a, Rational(1)},
                             {Polynomial::constant(Rational(0)), Polynomial::constant(Rational(1))},
                             {Rational(0), v, Rational(1)});
}

PiecewiseFn make_step(const Rational& initial, const std::vector<StepJump>& jumps) {
  std::vector<Rational> bps{Rational(0)};
  std::vector<Polynomial> pieces{Polynomial::constant(initial)};
  std::vector<Rational> values{initial};
  Rational level = initial;
  for (const auto& j : jumps) {
    if (!(j.at.sign() > 0 && j.at < Rational(1))) throw ConstructionError("step jumps must lie in (0,1)");
    if (!(bps.back() < j.at)) throw ConstructionError("step jumps must be strictly increasing");
    level += j.size;
    bps.push_back(j.at);
    values.push_back(j.value.value_or(level));
    pieces.push_back(Polynomial::constant(level));
  }
  bps.emplace_back(1);
  values.push_back(level);
  return PiecewiseFn::create(std::move(bps), std::move(pieces), std::move(values));
}

PiecewiseFn make_indicator(const std::vector<Rational>& points) {
  std::vector<Rational> pts = points;
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
    throw ConstructionError("indicator points must be distinct");
  }
  std::map<Rational, Rational> marked;
  for (const auto& p : pts) {
    if (p.sign() < 0 || p > Rational(1)) throw ConstructionError("indicator points must lie in [0,1]");
    marked.emplace(p, Rational(1));
  }
  std::vector<Rational> bps{Rational(0)};
  for (const auto& p : pts) {
    if (p.sign() > 0 && p < Rational(1)) bps.push_back(p);
  }
  bps.emplace_back(1);
  std::vector<Rational> values;
  for (const auto& b : bps) values.push_back(marked.count(b) ? Rational(1) : Rational(0));
  std::vector<Polynomial> pieces(bps.size() - 1);
  return PiecewiseFn::create(std::move(bps), std::move(pieces), std::move(values));
}

PiecewiseFn make_polynomial(const Polynomial& p) { return PiecewiseFn::polynomial(p); }

ThomaeFn make_thomae(HeightedSet support, WeightRule rule, LevelRule level_rule) {
  return ThomaeFn(std::move(support), std::move(rule), level_rule);
}

ThomaeFn make_php_h(const std::vector<std::vector<Rational>>& closed_sets) {
  std::map<Rational, std::uint32_t> least;
  for (std::size_t n = 0; n < closed_sets.size(); ++n) {
    for (const auto& x : closed_sets[n]) least.emplace(x, static_cast<std::uint32_t>(n));
  }
  std::vector<Rational> pts;
  std::vector<std::uint32_t> heights;
  for (const auto& [x, n] : least) {
    pts.push_back(x);
    heights.push_back(n);
  }
  return ThomaeFn(HeightedSet(std::move(pts), std::move(heights), static_cast<std::uint32_t>(closed_sets.size())),
                  WeightRule::geometric(), LevelRule::Height);
}

DirichletFn make_dirichlet(std::vector<Rational> designated) { return DirichletFn(std::move(designated)); }

GalleryFn linear_combination(const Rational& a, const GalleryFn& f, const Rational& b, const GalleryFn& g) {
  return LinearCombination{a, std::make_shared<const GalleryFn>(f), b, std::make_shared<const GalleryFn>(g)};
}

GalleryFn sum(const GalleryFn& f, const GalleryFn& g) { return linear_combination(Rational(1), f, Rational(1), g); }

GalleryFn difference(const GalleryFn& f, const GalleryFn& g) {
  return linear_combination(Rational(1), f, Rational(-1), g);
}

PiecewiseFn rational_restriction(const ThomaeFn& f) {
  const auto& pts = f.support().points();
  std::map<Rational, Rational> weight;
  for (std::size_t i = 0; i < pts.size(); ++i) weight.emplace(pts[i], f.weight_at(i));
  std::vector<Rational> bps{Rational(0)};
  for (const auto& p : pts) {
    if (p.sign() > 0 && p < Rational(1)) bps.push_back(p);
  }
  bps.emplace_back(1);
  std::vector<Rational> values;
  for (const auto& b : bps) {
    const auto it = weight.find(b);
    values.push_back(it == weight.end() ? Rational(0) : it->second);
  }
  std::vector<Polynomial> pieces(bps.size() - 1);
  return PiecewiseFn::create(std::move(bps), std::move(pieces), std::move(values));
}

}  // namespace bernstein
