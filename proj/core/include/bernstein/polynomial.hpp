#pragma once

#include <vector>

#include "bernstein/rational.hpp"

namespace bernstein {

/// Dense polynomial with exact rational coefficients, lowest degree first.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial identity();
  static Polynomial monomial(unsigned degree, const Rational& c = Rational(1));

  Rational operator()(const Rational& x) const;
  double eval(double x) const;

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

  Polynomial derivative() const;
  /// q(t) = p(t + a).
  Polynomial shifted(const Rational& a) const;
  /// q(t) = p(-t).
  Polynomial reflected() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Default number of sign bisections used to bracket an irrational root.
inline constexpr int kDefaultBisections = 40;

/// Points of (lo, hi) where the derivative of p changes sign or vanishes,
/// in increasing order. Roots are located by sign bisection; `exact` is false
/// when at least one point is only a bisection approximation.
struct CriticalPoints {
  std::vector<Rational> points;
  bool exact = true;
};
CriticalPoints critical_points(const Polynomial& p, const Rational& lo, const Rational& hi,
                               int bisections = kDefaultBisections);

/// Roots of p inside the open interval (lo, hi), same conventions as above.
CriticalPoints roots_in(const Polynomial& p, const Rational& lo, const Rational& hi,
                        int bisections = kDefaultBisections);

/// Extremes of p over the closed interval [lo, hi].
struct Extrema {
  Rational min;
  Rational max;
  bool exact = true;
};
Extrema extrema(const Polynomial& p, const Rational& lo, const Rational& hi,
                int bisections = kDefaultBisections);

/// Sign of p(x0 + t) - c as t -> 0+ (direction = +1) or t -> 0- (direction = -1).
int approach_sign(const Polynomial& p, const Rational& x0, const Rational& c, int direction);

}  // namespace bernstein
