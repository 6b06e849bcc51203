#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bernstein/engine.hpp"

namespace bernstein {

/// sup f - inf f over the closed interval [a, b]. Piecewise functions use
/// piece extrema plus breakpoint values and limits; Thomae-type functions
/// use the largest support weight inside (the infimum is always 0); the
/// Dirichlet indicator gives 1. Irrational turning points enter at their
/// bisection approximation.
Rational oscillation_interval(const GalleryFn& f, const Rational& a, const Rational& b);

/// Pointwise oscillation from stored limit data: max - min of f(x0), f(x0+), f(x0-).
Rational oscillation_point(const GalleryFn& f, const Rational& x0);
/// Cross-check: oscillation over the ball of radius 2^-depth around x0.
Rational oscillation_point_sampled(const GalleryFn& f, const Rational& x0, unsigned depth = 20);

/// D_k = {x : max(|f(x) - f(x+)|, |f(x) - f(x-)|) > 2^-k}.
struct JumpSet {
  unsigned k = 0;
  std::vector<Rational> points;
  /// Set for Thomae-type functions: only the materialized support was scanned.
  bool bounded_depth = false;
};
/// Throws NotRegulatedError for the Dirichlet indicator. For functions of
/// exact variation at most 1 it also checks |D_k| <= 2^k.
JumpSet jump_set(const GalleryFn& f, unsigned k);

enum class BProbeVerdict { InBf, NotInBf, Inconclusive };
struct BProbe {
  Rational x;
  BProbeVerdict verdict = BProbeVerdict::Inconclusive;
  /// Last trajectory value.
  Rational estimate;
  /// f(x).
  Rational target;
};
/// InBf when the last three trajectory values lie within tol of f(x0);
/// NotInBf when they agree with each other within tol and the last one is
/// more than 2 tol away from f(x0); Inconclusive otherwise.
BProbe b_set_probe(const GalleryFn& f, const Rational& x0, const std::vector<std::size_t>& schedule,
                   const Rational& tol, Mode mode = Mode::Exact);
std::vector<BProbe> b_set_sweep(const GalleryFn& f, const std::vector<Rational>& xs,
                                const std::vector<std::size_t>& schedule, const Rational& tol,
                                Mode mode = Mode::Exact);

/// E_{q,l} = {x : f(x) <= q, every neighbourhood holds z with f(z) > q + 2^-l}.
struct LevelJumpSet {
  std::vector<Rational> points;
  /// Set for Thomae-type functions, where the answer holds for the truncation only.
  bool bounded_depth = false;
};
LevelJumpSet level_jump_set(const GalleryFn& f, const Rational& q, unsigned l);

struct IntervalCover {
  /// Open intervals (a_i, b_i).
  std::vector<std::pair<Rational, Rational>> intervals;
  Rational total_length;
};
/// Interval i has length eps/2^{i+1} and is centred on points[i].
IntervalCover cover(const std::vector<Rational>& points, const Rational& eps);
/// Set n is covered with budget eps/2^{n+1}; the pieces are concatenated.
IntervalCover cover_union(const std::vector<std::vector<Rational>>& sets, const Rational& eps);
/// Whether every point lies in some open interval of the cover.
bool covers_all(const IntervalCover& c, const std::vector<Rational>& points);

/// A rational in (0,1) outside every given finite set, by nested trisection
/// of [0,1] preferring the lowest third free of the current set.
Rational baire_witness(const std::vector<std::vector<Rational>>& avoid);

}  // namespace bernstein
