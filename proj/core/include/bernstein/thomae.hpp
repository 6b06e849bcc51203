#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bernstein/rational.hpp"

namespace bernstein {

/// Finite, enumerated point set in [0,1] with a natural-number height per
/// point. A_n = {x : H(x) < n} is fully materialized for n <= truncation_depth.
class HeightedSet {
 public:
  HeightedSet() = default;
  /// Throws ConstructionError on duplicate or out-of-range points. The default
  /// truncation depth is max height + 1 (0 for the empty set).
  HeightedSet(std::vector<Rational> points, std::vector<std::uint32_t> heights,
              std::optional<std::uint32_t> truncation_depth = std::nullopt);

  /// Points sorted increasingly, heights aligned with them.
  const std::vector<Rational>& points() const { return points_; }
  const std::vector<std::uint32_t>& heights() const { return heights_; }
  std::uint32_t truncation_depth() const { return truncation_depth_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  std::optional<std::uint32_t> height_of(const Rational& x) const;
  /// A_n in increasing order. Throws CapacityError when n exceeds the truncation depth.
  std::vector<Rational> level_set(std::uint32_t n) const;
  /// Indices of points inside the closed interval [a, b].
  std::pair<std::size_t, std::size_t> index_range(const Rational& a, const Rational& b) const;

  friend bool operator==(const HeightedSet&, const HeightedSet&) = default;

 private:
  std::vector<Rational> points_;
  std::vector<std::uint32_t> heights_;
  std::uint32_t truncation_depth_ = 0;
};

/// Map from a level n to a positive weight; nonincreasing in n.
class WeightRule {
 public:
  enum class Kind { Geometric, Rescaled };

  /// n -> 1/2^{n+1}.
  static WeightRule geometric() { return WeightRule(Kind::Geometric, {}); }
  /// n -> 1/(2^n (g0(n) + 2)); g0 must cover every level that will be queried.
  static WeightRule rescaled(std::vector<std::uint64_t> g0);

  Kind kind() const { return kind_; }
  const std::vector<std::uint64_t>& g0() const { return g0_; }
  Rational operator()(std::uint32_t level) const;

  friend bool operator==(const WeightRule&, const WeightRule&) = default;

 private:
  WeightRule(Kind kind, std::vector<std::uint64_t> g0) : kind_(kind), g0_(std::move(g0)) {}
  Kind kind_;
  std::vector<std::uint64_t> g0_;
};

/// How a point's height selects its weight level.
enum class LevelRule {
  Height,      ///< level = H(x): weight 1/2^{H(x)+1} under the geometric rule.
  LeastAbove,  ///< level = least n with H(x) < n, i.e. H(x) + 1.
};

/// Thomae-type function: zero off its (finite, truncated) support and
/// weight_rule(level(x)) on it. Both one-sided limits vanish everywhere.
class ThomaeFn {
 public:
  ThomaeFn(HeightedSet support, WeightRule rule = WeightRule::geometric(), LevelRule level_rule = LevelRule::Height);

  Rational eval(const Rational& x) const;
  std::uint32_t level_of_height(std::uint32_t h) const { return level_rule_ == LevelRule::Height ? h : h + 1; }
  /// Weight carried by the i-th support point.
  Rational weight_at(std::size_t i) const;
  /// Largest value on [a, b]; zero when no support point lies inside.
  Rational max_on(const Rational& a, const Rational& b) const;

  const HeightedSet& support() const { return support_; }
  const WeightRule& rule() const { return rule_; }
  LevelRule level_rule() const { return level_rule_; }

  friend bool operator==(const ThomaeFn&, const ThomaeFn&) = default;

 private:
  HeightedSet support_;
  WeightRule rule_;
  LevelRule level_rule_;
};

/// Indicator of a designated enumerated set. Models the indicator of a dense
/// set: it is nowhere regulated and has oscillation 1 on every interval.
class DirichletFn {
 public:
  explicit DirichletFn(std::vector<Rational> designated);
  Rational eval(const Rational& x) const;
  const std::vector<Rational>& designated() const { return designated_; }
  friend bool operator==(const DirichletFn&, const DirichletFn&) = default;

 private:
  std::vector<Rational> designated_;
};

}  // namespace bernstein
