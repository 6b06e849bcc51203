#pragma once

#include <optional>
#include <vector>

#include "bernstein/polynomial.hpp"
#include "bernstein/rational.hpp"

namespace bernstein {

/// Value and one-sided limits stored at a breakpoint. The left limit is
/// absent at 0 and the right limit is absent at 1.
struct BreakpointData {
  Rational value;
  std::optional<Rational> left_limit;
  std::optional<Rational> right_limit;

  friend bool operator==(const BreakpointData&, const BreakpointData&) = default;
};

/// Function on [0,1] given by polynomial pieces between finitely many
/// breakpoints, with a freely chosen value at every breakpoint.
///
/// Breakpoints are strictly increasing, start at 0 and end at 1; piece i lives
/// on the open interval (b_i, b_{i+1}). The stored one-sided limits always
/// agree with the adjacent pieces' endpoint values.
class PiecewiseFn {
 public:
  /// Builds the function and derives the one-sided limits from the pieces.
  static PiecewiseFn create(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces,
                            std::vector<Rational> values);
  /// Builds the function from fully specified point data, validating the
  /// stored limits against the pieces.
  static PiecewiseFn from_parts(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces,
                                std::vector<BreakpointData> point_data);
  /// A polynomial on [0,1] with no interior breakpoints.
  static PiecewiseFn polynomial(const Polynomial& p);

  Rational eval(const Rational& x) const;
  Rational left_limit(const Rational& x) const;
  Rational right_limit(const Rational& x) const;

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  const std::vector<BreakpointData>& point_data() const { return point_data_; }

  /// Index of the breakpoint equal to x, if any.
  std::optional<std::size_t> breakpoint_index(const Rational& x) const;
  /// Index of the piece whose open interval contains x (x not a breakpoint).
  std::size_t piece_index(const Rational& x) const;

  /// The single polynomial this function equals everywhere on [0,1], if any.
  std::optional<Polynomial> as_polynomial() const;

  /// a*f + b*g on the merged breakpoint set.
  static PiecewiseFn combine(const Rational& a, const PiecewiseFn& f, const Rational& b, const PiecewiseFn& g);

  friend bool operator==(const PiecewiseFn&, const PiecewiseFn&) = default;

 private:
  PiecewiseFn() = default;
  static void validate_layout(const std::vector<Rational>& breakpoints, const std::vector<Polynomial>& pieces);

  std::vector<Rational> breakpoints_;
  std::vector<Polynomial> pieces_;
  std::vector<BreakpointData> point_data_;
};

}  // namespace bernstein
