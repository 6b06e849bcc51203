#include "bernstein/binomial.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "bernstein/errors.hpp"

namespace bernstein {
namespace {

void require_unit_interval(const Rational& x) {
  if (x.sign() < 0 || x > Rational(1)) {
    throw DomainError("x = " + x.str() + " lies outside [0,1]");
  }
}

// Stirling-series remainder: log(n!) - [log(sqrt(2 pi n)) + n log(n/e)].
double stirlerr(double n) {
  static const std::array<double, 16> table = [] {
    std::array<double, 16> t{};
    const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
    for (int i = 1; i < 16; ++i) {
      t[i] = std::lgamma(i + 1.0) + i - half_log_2pi - (i + 0.5) * std::log(static_cast<double>(i));
    }
    return t;
  }();
  constexpr double s0 = 1.0 / 12, s1 = 1.0 / 360, s2 = 1.0 / 1260, s3 = 1.0 / 1680, s4 = 1.0 / 1188;
  if (n < 16) return table[static_cast<std::size_t>(n)];
  const double nn = 1.0 / (n * n);
  if (n > 500) return (s0 - s1 * nn) / n;
  if (n > 80) return (s0 - (s1 - s2 * nn) * nn) / n;
  if (n > 35) return (s0 - (s1 - (s2 - s3 * nn) * nn) * nn) / n;
  return (s0 - (s1 - (s2 - (s3 - s4 * nn) * nn) * nn) * nn) / n;
}

// Deviance term k log(k/np) + np - k, evaluated without cancellation near k = np.
double bd0(double k, double np) {
  if (std::fabs(k - np) < 0.1 * (k + np)) {
    const double v = (k - np) / (k + np);
    double s = (k - np) * v;
    double ej = 2 * k * v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v * v;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
    return s;
  }
  return k * std::log(k / np) + np - k;
}

double log_binomial_pmf(double k, double n, double x) {
  if (k == 0) return n * std::log1p(-x);
  if (k == n) return n * std::log(x);
  const double lc = stirlerr(n) - stirlerr(k) - stirlerr(n - k) - bd0(k, n * x) - bd0(n - k, n * (1 - x));
  return lc + 0.5 * std::log(n / (2 * std::numbers::pi * k * (n - k)));
}

}  // namespace

BigInt binom(unsigned long n, unsigned long k) {
  if (k > n) throw DomainError("binom: k > n");
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

ScaledPmfRow pmf_row_scaled(std::size_t n, const Rational& x) {
  require_unit_interval(x);
  if (n > kExactDegreeLimit) {
    throw CapacityError("exact PMF row for n = " + std::to_string(n) + " exceeds the limit of " +
                        std::to_string(kExactDegreeLimit) + "; use float mode");
  }
  ScaledPmfRow row;
  row.numerators.assign(n + 1, BigInt(0));
  if (x.is_zero()) {
    row.numerators.front() = 1;
    row.denominator = 1;
    return row;
  }
  if (x == Rational(1)) {
    row.numerators.back() = 1;
    row.denominator = 1;
    return row;
  }
  const BigInt p = x.numerator();
  const BigInt q = x.denominator();
  const BigInt complement = q - p;
  mpz_pow_ui(row.denominator.get_mpz_t(), q.get_mpz_t(), n);
  mpz_pow_ui(row.numerators[0].get_mpz_t(), complement.get_mpz_t(), n);
  for (std::size_t k = 0; k < n; ++k) {
    BigInt next = row.numerators[k] * p;
    next *= static_cast<unsigned long>(n - k);
    BigInt divisor = complement * static_cast<unsigned long>(k + 1);
    mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), divisor.get_mpz_t());
    row.numerators[k + 1] = std::move(next);
  }
  return row;
}

PmfRow pmf_row(std::size_t n, const Rational& x) {
  ScaledPmfRow scaled = pmf_row_scaled(n, x);
  PmfRow row{n, x, {}};
  row.weights.reserve(n + 1);
  for (const BigInt& num : scaled.numerators) row.weights.emplace_back(num, scaled.denominator);
  return row;
}

std::vector<double> pmf_row_float(std::size_t n, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("x lies outside [0,1]");
  if (n < 1 || n > kFloatDegreeLimit) {
    throw DomainError("float PMF requires 1 <= n <= " + std::to_string(kFloatDegreeLimit));
  }
  std::vector<double> w(n + 1, 0.0);
  if (x == 0.0) {
    w.front() = 1.0;
    return w;
  }
  if (x == 1.0) {
    w.back() = 1.0;
    return w;
  }
  const double nd = static_cast<double>(n);
  for (std::size_t k = 0; k <= n; ++k) {
    w[k] = std::exp(log_binomial_pmf(static_cast<double>(k), nd, x));
  }
  return w;
}

Rational second_moment(std::size_t n, const Rational& x) {
  if (n == 0) throw DomainError("second moment requires n >= 1");
  const PmfRow row = pmf_row(n, x);
  Rational sum;
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational d = x - Rational(k, n);
    sum += d * d * row.weights[k];
  }
  return sum;
}

}  // namespace bernstein
