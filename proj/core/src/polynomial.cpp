#include "bernstein/polynomial.hpp"

#include <algorithm>
#include <cassert>

#include "bernstein/binomial.hpp"

namespace bernstein {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::identity() { return Polynomial({Rational(0), Rational(1)}); }

Polynomial Polynomial::monomial(unsigned degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double Polynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(const Rational& a) const {
  // Taylor shift: sum_i c_i (t + a)^i expanded via binomial coefficients.
  const std::size_t n = coeffs_.size();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    Rational apow(1);
    for (std::size_t j = i + 1; j-- > 0;) {
      // term: C(i, j) a^{i-j} t^j
      out[j] += coeffs_[i] * Rational(binom(i, j)) * apow;
      apow *= a;
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::reflected() const {
  std::vector<Rational> out = coeffs_;
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

namespace {

// Bisects a bracket [a, b] with sign(p(a)) != sign(p(b)), both nonzero.
// Returns the root (exact when a midpoint or the simplest rational in the final
// bracket annihilates p) and whether it is exact.
std::pair<Rational, bool> bisect_root(const Polynomial& p, Rational a, Rational b, int bisections) {
  const int sign_a = p(a).sign();
  for (int i = 0; i < bisections; ++i) {
    Rational mid = (a + b) / Rational(2);
    const int s = p(mid).sign();
    if (s == 0) return {mid, true};
    if (s == sign_a) {
      a = std::move(mid);
    } else {
      b = std::move(mid);
    }
  }
  Rational simple = simplest_between(a, b);
  if (p(simple).is_zero()) return {simple, true};
  return {(a + b) / Rational(2), false};
}

}  // namespace

CriticalPoints roots_in(const Polynomial& p, const Rational& lo, const Rational& hi, int bisections) {
  CriticalPoints out;
  if (p.degree() <= 0 || !(lo < hi)) return out;  // constants: no isolated roots
  if (p.degree() == 1) {
    const Rational r = -p.coefficient(0) / p.coefficient(1);
    if (lo < r && r < hi) out.points.push_back(r);
    return out;
  }
  // p is monotone between consecutive critical points, so each segment holds
  // at most one root.
  const CriticalPoints turning = critical_points(p, lo, hi, bisections);
  out.exact = turning.exact;
  std::vector<Rational> nodes;
  nodes.reserve(turning.points.size() + 2);
  nodes.push_back(lo);
  nodes.insert(nodes.end(), turning.points.begin(), turning.points.end());
  nodes.push_back(hi);
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const Rational& a = nodes[i];
    const Rational& b = nodes[i + 1];
    const int sa = p(a).sign();
    const int sb = p(b).sign();
    if (sa == 0 && i > 0) {
      if (out.points.empty() || out.points.back() != a) out.points.push_back(a);
    }
    if (sa != 0 && sb != 0 && sa != sb) {
      auto [root, exact] = bisect_root(p, a, b, bisections);
      out.exact = out.exact && exact;
      out.points.push_back(std::move(root));
    }
  }
  return out;
}

CriticalPoints critical_points(const Polynomial& p, const Rational& lo, const Rational& hi, int bisections) {
  return roots_in(p.derivative(), lo, hi, bisections);
}

Extrema extrema(const Polynomial& p, const Rational& lo, const Rational& hi, int bisections) {
  Extrema e{p(lo), p(lo), true};
  auto visit = [&](const Rational& x) {
    const Rational v = p(x);
    if (v < e.min) e.min = v;
    if (e.max < v) e.max = v;
  };
  visit(hi);
  if (lo < hi) {
    const CriticalPoints cps = critical_points(p, lo, hi, bisections);
    e.exact = cps.exact;
    for (const auto& c : cps.points) visit(c);
  }
  return e;
}

int approach_sign(const Polynomial& p, const Rational& x0, const Rational& c, int direction) {
  Polynomial local = p.shifted(x0) - Polynomial::constant(c);
  if (direction < 0) local = local.reflected();
  for (const auto& coeff : local.coefficients()) {
    if (!coeff.is_zero()) return coeff.sign();
  }
  return 0;
}

}  // namespace bernstein
