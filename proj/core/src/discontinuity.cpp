#include "bernstein/discontinuity.hpp"

#include <algorithm>

#include "bernstein/errors.hpp"

namespace bernstein {
namespace {

void require_point(const Rational& x) {
  if (x.sign() < 0 || x > Rational(1)) throw DomainError("x = " + x.str() + " lies outside [0,1]");
}

struct Range {
  std::optional<Rational> lo, hi;
  void add(const Rational& v) {
    if (!lo || v < *lo) lo = v;
    if (!hi || *hi < v) hi = v;
  }
  Rational width() const { return lo ? *hi - *lo : Rational(0); }
};

Rational piecewise_oscillation(const PiecewiseFn& f, const Rational& a, const Rational& b) {
  const auto& bps = f.breakpoints();
  Range r;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const auto& d = f.point_data()[i];
    if (a <= bps[i] && bps[i] <= b) {
      r.add(d.value);
      if (d.left_limit && a < bps[i]) r.add(*d.left_limit);
      if (d.right_limit && bps[i] < b) r.add(*d.right_limit);
    }
    if (i + 1 < bps.size()) {
      const Rational lo = max(bps[i], a);
      const Rational hi = min(bps[i + 1], b);
      if (lo < hi) {
        const Extrema e = extrema(f.pieces()[i], lo, hi);
        r.add(e.min);
        r.add(e.max);
      }
    }
  }
  return r.width();
}

std::vector<Rational> jump_points(const PiecewiseFn& f, const Rational& threshold) {
  std::vector<Rational> out;
  const auto& bps = f.breakpoints();
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const auto& d = f.point_data()[i];
    const bool left = d.left_limit && threshold < abs(d.value - *d.left_limit);
    const bool right = d.right_limit && threshold < abs(d.value - *d.right_limit);
    if (left || right) out.push_back(bps[i]);
  }
  return out;
}

}  // namespace

Rational oscillation_interval(const GalleryFn& f, const Rational& a, const Rational& b) {
  require_point(a);
  require_point(b);
  if (!(a < b)) throw DomainError("oscillation interval needs a < b");
  if (f.dirichlet()) return Rational(1);
  if (const auto* t = f.thomae()) return t->max_on(a, b);
  if (const auto p = as_piecewise(f)) return piecewise_oscillation(*p, a, b);
  throw DomainError("oscillation needs a piecewise, Thomae-type or Dirichlet function");
}

Rational oscillation_point(const GalleryFn& f, const Rational& x0) {
  require_point(x0);
  if (f.dirichlet()) return Rational(1);
  if (const auto* t = f.thomae()) return t->eval(x0);
  const auto p = as_piecewise(f);
  if (!p) throw DomainError("oscillation needs a piecewise, Thomae-type or Dirichlet function");
  Range r;
  r.add(p->eval(x0));
  if (x0.sign() > 0) r.add(p->left_limit(x0));
  if (x0 < Rational(1)) r.add(p->right_limit(x0));
  return r.width();
}

Rational oscillation_point_sampled(const GalleryFn& f, const Rational& x0, unsigned depth) {
  require_point(x0);
  const Rational radius = Rational::pow2(-static_cast<long>(depth));
  return oscillation_interval(f, max(Rational(0), x0 - radius), min(Rational(1), x0 + radius));
}

JumpSet jump_set(const GalleryFn& f, unsigned k) {
  if (f.dirichlet()) throw NotRegulatedError("Dirichlet indicator has no jump set");
  const Rational threshold = Rational::pow2(-static_cast<long>(k));
  JumpSet out;
  out.k = k;
  if (const auto* t = f.thomae()) {
    out.bounded_depth = true;
    for (std::size_t i = 0; i < t->support().size(); ++i) {
      if (threshold < t->weight_at(i)) out.points.push_back(t->support().points()[i]);
    }
    if (!(thomae_truncated_variation(*t, Rational(1)) > Rational(1)) && k < 63 &&
        out.points.size() > (std::uint64_t{1} << k)) {
      throw ConsistencyError("jump set exceeds 2^k points for a function of variation at most 1");
    }
    return out;
  }
  const auto p = as_piecewise(f);
  if (!p) throw DomainError("jump sets need a piecewise or Thomae-type function");
  out.points = jump_points(*p, threshold);
  const ExactVariation v = piecewise_variation(*p, Rational(1));
  if (v.exact && !(v.value > Rational(1)) && k < 63 && out.points.size() > (std::uint64_t{1} << k)) {
    throw ConsistencyError("jump set exceeds 2^k points for a function of variation at most 1");
  }
  return out;
}

BProbe b_set_probe(const GalleryFn& f, const Rational& x0, const std::vector<std::size_t>& schedule,
                   const Rational& tol, Mode mode) {
  validate_schedule(schedule);
  require_point(x0);
  if (tol.sign() <= 0) throw DomainError("tolerance must be positive");
  BProbe out;
  out.x = x0;
  out.target = eval(f, x0);
  std::vector<Rational> values;
  for (std::size_t n : schedule) values.push_back(bernstein_value(f, n, x0, mode));
  out.estimate = values.back();
  const std::size_t m = values.size();
  if (m < 3) return out;
  bool near_target = true;
  Range tail;
  for (std::size_t i = m - 3; i < m; ++i) {
    near_target = near_target && abs(values[i] - out.target) < tol;
    tail.add(values[i]);
  }
  if (near_target) {
    out.verdict = BProbeVerdict::InBf;
  } else if (tail.width() < tol && abs(out.estimate - out.target) > Rational(2) * tol) {
    out.verdict = BProbeVerdict::NotInBf;
  }
  return out;
}

std::vector<BProbe> b_set_sweep(const GalleryFn& f, const std::vector<Rational>& xs,
                                const std::vector<std::size_t>& schedule, const Rational& tol, Mode mode) {
  std::vector<BProbe> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(b_set_probe(f, x, schedule, tol, mode));
  return out;
}

LevelJumpSet level_jump_set(const GalleryFn& f, const Rational& q, unsigned l) {
  LevelJumpSet out;
  if (f.thomae()) {
    // Near any point the truncation vanishes off that point, and f >= 0, so no
    // x with f(x) <= q is approached by values above q + 2^-l.
    out.bounded_depth = true;
    return out;
  }
  if (f.dirichlet()) throw NotRegulatedError("level jump sets need one-sided limits");
  const auto p = as_piecewise(f);
  if (!p) throw DomainError("level jump sets need a piecewise or Thomae-type function");
  const Rational c = q + Rational::pow2(-static_cast<long>(l));
  const auto& bps = p->breakpoints();
  for (std::size_t i = 0; i < bps.size(); ++i) {
    if (q < p->point_data()[i].value) continue;
    const bool from_left = i > 0 && approach_sign(p->pieces()[i - 1], bps[i], c, -1) > 0;
    const bool from_right = i + 1 < bps.size() && approach_sign(p->pieces()[i], bps[i], c, +1) > 0;
    if (from_left || from_right) out.points.push_back(bps[i]);
  }
  return out;
}

IntervalCover cover(const std::vector<Rational>& points, const Rational& eps) {
  if (eps.sign() <= 0) throw DomainError("cover budget must be positive");
  IntervalCover out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Rational half = eps * Rational::pow2(-static_cast<long>(i) - 2);
    out.intervals.emplace_back(points[i] - half, points[i] + half);
    out.total_length += half * Rational(2);
  }
  return out;
}

IntervalCover cover_union(const std::vector<std::vector<Rational>>& sets, const Rational& eps) {
  if (eps.sign() <= 0) throw DomainError("cover budget must be positive");
  IntervalCover out;
  for (std::size_t n = 0; n < sets.size(); ++n) {
    IntervalCover part = cover(sets[n], eps * Rational::pow2(-static_cast<long>(n) - 1));
    out.intervals.insert(out.intervals.end(), part.intervals.begin(), part.intervals.end());
    out.total_length += part.total_length;
  }
  return out;
}

bool covers_all(const IntervalCover& c, const std::vector<Rational>& points) {
  return std::all_of(points.begin(), points.end(), [&](const Rational& x) {
    return std::any_of(c.intervals.begin(), c.intervals.end(),
                       [&](const auto& iv) { return iv.first < x && x < iv.second; });
  });
}

Rational baire_witness(const std::vector<std::vector<Rational>>& avoid) {
  Rational lo(0), hi(1);
  for (const auto& set : avoid) {
    auto count_in = [&set](const Rational& a, const Rational& b) {
      return std::count_if(set.begin(), set.end(), [&](const Rational& x) { return a <= x && x <= b; });
    };
    while (count_in(lo, hi) > 0) {
      const Rational third = (hi - lo) / Rational(3);
      std::size_t best = 0;
      std::ptrdiff_t best_count = -1;
      for (std::size_t j = 0; j < 3; ++j) {
        const Rational a = lo + third * Rational(j);
        const std::ptrdiff_t c = count_in(a, a + third);
        if (best_count < 0 || c < best_count) {
          best = j;
          best_count = c;
        }
        if (c == 0) break;
      }
      lo += third * Rational(best);
      hi = lo + third;
    }
  }
  return (lo + hi) / Rational(2);
}

}  // namespace bernstein
