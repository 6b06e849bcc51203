#include "bernstein/piecewise.hpp"

#include <algorithm>

#include "bernstein/errors.hpp"

namespace bernstein {
namespace {

void require_unit_interval(const Rational& x) {
  if (x.sign() < 0 || x > Rational(1)) throw DomainError("x = " + x.str() + " lies outside [0,1]");
}

}  // namespace

void PiecewiseFn::validate_layout(const std::vector<Rational>& breakpoints, const std::vector<Polynomial>& pieces) {
  if (breakpoints.size() < 2) throw ConstructionError("piecewise function needs breakpoints 0 and 1");
  if (!breakpoints.front().is_zero() || breakpoints.back() != Rational(1)) {
    throw ConstructionError("breakpoints must start at 0 and end at 1");
  }
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1])) {
      throw ConstructionError("breakpoints must be strictly increasing (duplicate or unsorted at " +
                              breakpoints[i + 1].str() + ")");
    }
  }
  if (pieces.size() + 1 != breakpoints.size()) {
    throw ConstructionError("expected " + std::to_string(breakpoints.size() - 1) + " pieces, got " +
                            std::to_string(pieces.size()));
  }
}

PiecewiseFn PiecewiseFn::create(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces,
                                std::vector<Rational> values) {
  validate_layout(breakpoints, pieces);
  if (values.size() != breakpoints.size()) throw ConstructionError("one value per breakpoint required");
  PiecewiseFn f;
  f.point_data_.reserve(breakpoints.size());
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    BreakpointData d{std::move(values[i]), std::nullopt, std::nullopt};
    if (i > 0) d.left_limit = pieces[i - 1](breakpoints[i]);
    if (i + 1 < breakpoints.size()) d.right_limit = pieces[i](breakpoints[i]);
    f.point_data_.push_back(std::move(d));
  }
  f.breakpoints_ = std::move(breakpoints);
  f.pieces_ = std::move(pieces);
  return f;
}

PiecewiseFn PiecewiseFn::from_parts(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces,
                                    std::vector<BreakpointData> point_data) {
  validate_layout(breakpoints, pieces);
  if (point_data.size() != breakpoints.size()) throw ConstructionError("one point record per breakpoint required");
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    const auto& d = point_data[i];
    const bool has_left = i > 0;
    const bool has_right = i + 1 < breakpoints.size();
    if (d.left_limit.has_value() != has_left || d.right_limit.has_value() != has_right) {
      throw ConstructionError("limit presence mismatch at breakpoint " + breakpoints[i].str());
    }
    if (has_left && *d.left_limit != pieces[i - 1](breakpoints[i])) {
      throw ConstructionError("stored left limit at " + breakpoints[i].str() + " disagrees with the piece");
    }
    if (has_right && *d.right_limit != pieces[i](breakpoints[i])) {
      throw ConstructionError("stored right limit at " + breakpoints[i].str() + " disagrees with the piece");
    }
  }
  PiecewiseFn f;
  f.breakpoints_ = std::move(breakpoints);
  f.pieces_ = std::move(pieces);
  f.point_data_ = std::move(point_data);
  return f;
}

PiecewiseFn PiecewiseFn::polynomial(const Polynomial& p) {
  return create({Rational(0), Rational(1)}, {p}, {p(Rational(0)), p(Rational(1))});
}

std::optional<std::size_t> PiecewiseFn::breakpoint_index(const Rational& x) const {
  const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
  if (it != breakpoints_.end() && *it == x) return static_cast<std::size_t>(it - breakpoints_.begin());
  return std::nullopt;
}

std::size_t PiecewiseFn::piece_index(const Rational& x) const {
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const auto idx = static_cast<std::size_t>(it - breakpoints_.begin());
  return idx == 0 ? 0 : std::min(idx - 1, pieces_.size() - 1);
}

Rational PiecewiseFn::eval(const Rational& x) const {
  require_unit_interval(x);
  if (const auto i = breakpoint_index(x)) return point_data_[*i].value;
  return pieces_[piece_index(x)](x);
}

Rational PiecewiseFn::left_limit(const Rational& x) const {
  if (!(x.sign() > 0) || x > Rational(1)) throw DomainError("left limit requires x in (0,1]");
  if (const auto i = breakpoint_index(x)) return *point_data_[*i].left_limit;
  return pieces_[piece_index(x)](x);
}

Rational PiecewiseFn::right_limit(const Rational& x) const {
  if (x.sign() < 0 || !(x < Rational(1))) throw DomainError("right limit requires x in [0,1)");
  if (const auto i = breakpoint_index(x)) return *point_data_[*i].right_limit;
  return pieces_[piece_index(x)](x);
}

std::optional<Polynomial> PiecewiseFn::as_polynomial() const {
  const Polynomial& p = pieces_.front();
  for (const auto& q : pieces_) {
    if (q != p) return std::nullopt;
  }
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (point_data_[i].value != p(breakpoints_[i])) return std::nullopt;
  }
  return p;
}

PiecewiseFn PiecewiseFn::combine(const Rational& a, const PiecewiseFn& f, const Rational& b, const PiecewiseFn& g) {
  std::vector<Rational> merged;
  merged.reserve(f.breakpoints_.size() + g.breakpoints_.size());
  std::set_union(f.breakpoints_.begin(), f.breakpoints_.end(), g.breakpoints_.begin(), g.breakpoints_.end(),
                 std::back_inserter(merged));
  std::vector<Polynomial> pieces;
  std::vector<Rational> values;
  pieces.reserve(merged.size() - 1);
  values.reserve(merged.size());
  for (std::size_t i = 0; i < merged.size(); ++i) {
    values.push_back(a * f.eval(merged[i]) + b * g.eval(merged[i]));
    if (i + 1 < merged.size()) {
      const Rational mid = (merged[i] + merged[i + 1]) / Rational(2);
      pieces.push_back(a * f.pieces_[f.piece_index(mid)] + b * g.pieces_[g.piece_index(mid)]);
    }
  }
  return create(std::move(merged), std::move(pieces), std::move(values));
}

}  // namespace bernstein
