#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bernstein/gallery.hpp"

namespace bernstein {

enum class VariationFlag { Exact, LowerBound };

struct VariationEntry {
  Rational y;
  Rational value;
  VariationFlag flag = VariationFlag::LowerBound;
};

/// V_0^y(f). When f is piecewise and the grid holds every breakpoint in
/// [0, y], the partition supremum is returned (monotone-piece increments plus
/// both one-sided jumps at each breakpoint), flagged Exact unless a turning
/// point is irrational. Otherwise sum |f(x_{i+1}) - f(x_i)| over the grid
/// with 0 and y added, flagged LowerBound.
/// Throws DomainError on an unsorted grid or one leaving [0, y].
VariationEntry variation(const GalleryFn& f, const Rational& y, const std::vector<Rational>& grid);

struct VariationProfile {
  std::vector<Rational> nodes;
  std::vector<Rational> cumulative;
  VariationFlag flag = VariationFlag::Exact;
};
/// V_0^node for every node, using the nodes up to it as the grid.
VariationProfile variation_profile(const GalleryFn& f, const std::vector<Rational>& nodes);

/// f = g - h with g(x) = V_0^x(f) and g(0) = 0; both nondecreasing.
/// Throws NeedsBreakpointsError when a turning point is irrational.
std::pair<PiecewiseFn, PiecewiseFn> jordan_decompose(const GalleryFn& f);

/// Whether f never decreases along the given sorted points.
bool nondecreasing_on(const GalleryFn& f, const std::vector<Rational>& points);

/// Indices whose values agree within tol at every grid point, found by
/// value bisection per grid point (keep the fuller half, ties to the half
/// holding the earliest index). Throws InconclusiveError, carrying the
/// survivors, when fewer than three remain.
std::vector<std::size_t> helly_select(const std::vector<GalleryFn>& fs, const std::vector<Rational>& grid,
                                      const Rational& tol);

/// g0(n) = floor(V_0^1(f_n)), checked against g0 <= V <= g0 + 1.
std::vector<std::uint64_t> helly_witness(const std::vector<GalleryFn>& fs);

enum class TagRule { LeftEndpoint, Midpoint, AdversarialMaxOsc };
/// sum f(t_i) (x_{i+1} - x_i) over 0, mesh, 2 mesh, ..., 1 (last cell clipped).
/// AdversarialMaxOsc picks, per cell, the candidate with the largest |f| among
/// the cell ends, breakpoints, support points and turning points inside.
Rational riemann_sum(const GalleryFn& f, const Rational& mesh, TagRule rule);

}  // namespace bernstein
