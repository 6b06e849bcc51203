#include "bernstein/thomae.hpp"

#include <algorithm>
#include <numeric>

#include "bernstein/errors.hpp"

namespace bernstein {
namespace {

void require_unit_interval(const Rational& x) {
  if (x.sign() < 0 || x > Rational(1)) throw DomainError("x = " + x.str() + " lies outside [0,1]");
}

}  // namespace

HeightedSet::HeightedSet(std::vector<Rational> points, std::vector<std::uint32_t> heights,
                         std::optional<std::uint32_t> truncation_depth) {
  if (points.size() != heights.size()) throw ConstructionError("one height per point required");
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  points_.reserve(points.size());
  heights_.reserve(points.size());
  for (std::size_t i : order) {
    require_unit_interval(points[i]);
    if (!points_.empty() && points_.back() == points[i]) {
      throw ConstructionError("duplicate point " + points[i].str() + " in heighted set");
    }
    points_.push_back(points[i]);
    heights_.push_back(heights[i]);
  }
  const std::uint32_t natural_depth =
      heights_.empty() ? 0 : *std::max_element(heights_.begin(), heights_.end()) + 1;
  truncation_depth_ = truncation_depth.value_or(natural_depth);
}

std::optional<std::uint32_t> HeightedSet::height_of(const Rational& x) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), x);
  if (it == points_.end() || *it != x) return std::nullopt;
  return heights_[static_cast<std::size_t>(it - points_.begin())];
}

std::vector<Rational> HeightedSet::level_set(std::uint32_t n) const {
  if (n > truncation_depth_) {
    throw CapacityError("A_" + std::to_string(n) + " lies beyond the truncation depth " +
                        std::to_string(truncation_depth_));
  }
  std::vector<Rational> out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (heights_[i] < n) out.push_back(points_[i]);
  }
  return out;
}

std::pair<std::size_t, std::size_t> HeightedSet::index_range(const Rational& a, const Rational& b) const {
  const auto lo = std::lower_bound(points_.begin(), points_.end(), a);
  const auto hi = std::upper_bound(points_.begin(), points_.end(), b);
  return {static_cast<std::size_t>(lo - points_.begin()), static_cast<std::size_t>(hi - points_.begin())};
}

WeightRule WeightRule::rescaled(std::vector<std::uint64_t> g0) {
  // 1/(2^n (g0(n)+2)) is nonincreasing iff 2 (g0(n+1) + 2) >= g0(n) + 2.
  for (std::size_t n = 0; n + 1 < g0.size(); ++n) {
    if (2 * (g0[n + 1] + 2) < g0[n] + 2) {
      throw ConstructionError("rescaled weight rule is increasing at level " + std::to_string(n + 1));
    }
  }
  return WeightRule(Kind::Rescaled, std::move(g0));
}

Rational WeightRule::operator()(std::uint32_t level) const {
  if (kind_ == Kind::Geometric) return Rational::pow2(-static_cast<long>(level) - 1);
  if (level >= g0_.size()) {
    throw DomainError("rescaled weight rule has no g0 value at level " + std::to_string(level));
  }
  return Rational::pow2(-static_cast<long>(level)) / Rational(g0_[level] + 2);
}

ThomaeFn::ThomaeFn(HeightedSet support, WeightRule rule, LevelRule level_rule)
    : support_(std::move(support)), rule_(std::move(rule)), level_rule_(level_rule) {
  for (std::uint32_t h : support_.heights()) {
    if (rule_(level_of_height(h)).sign() <= 0) throw ConstructionError("weights must be positive");
  }
}

Rational ThomaeFn::eval(const Rational& x) const {
  require_unit_interval(x);
  const auto h = support_.height_of(x);
  return h ? rule_(level_of_height(*h)) : Rational(0);
}

Rational ThomaeFn::weight_at(std::size_t i) const { return rule_(level_of_height(support_.heights().at(i))); }

Rational ThomaeFn::max_on(const Rational& a, const Rational& b) const {
  const auto [lo, hi] = support_.index_range(a, b);
  if (lo >= hi) return Rational(0);
  std::uint32_t least = support_.heights()[lo];
  for (std::size_t i = lo; i < hi; ++i) least = std::min(least, support_.heights()[i]);
  return rule_(level_of_height(least));
}

DirichletFn::DirichletFn(std::vector<Rational> designated) : designated_(std::move(designated)) {
  std::sort(designated_.begin(), designated_.end());
  designated_.erase(std::unique(designated_.begin(), designated_.end()), designated_.end());
  for (const auto& x : designated_) require_unit_interval(x);
}

Rational DirichletFn::eval(const Rational& x) const {
  require_unit_interval(x);
  return std::binary_search(designated_.begin(), designated_.end(), x) ? Rational(1) : Rational(0);
}

}  // namespace bernstein
