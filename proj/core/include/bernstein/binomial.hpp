#pragma once

#include <cstddef>
#include <vector>

#include "bernstein/rational.hpp"

namespace bernstein {

/// Largest degree for which exact PMF rows are materialized. Denominators
/// grow like den(x)^n, so beyond this callers must switch to float mode.
inline constexpr std::size_t kExactDegreeLimit = 5000;

/// Largest degree accepted by the float PMF.
inline constexpr std::size_t kFloatDegreeLimit = std::size_t{1} << 20;

/// C(n, k) exactly. Throws DomainError when k > n.
BigInt binom(unsigned long n, unsigned long k);

/// The binomial weights p_{n,0}(x) ... p_{n,n}(x).
struct PmfRow {
  std::size_t n = 0;
  Rational x;
  std::vector<Rational> weights;
};

/// A PMF row over a common denominator: p_{n,k}(x) = numerators[k] / denominator.
/// With x = p/q in lowest terms the denominator is q^n.
struct ScaledPmfRow {
  std::vector<BigInt> numerators;
  BigInt denominator;
};

/// Exact PMF row by the multiplicative recurrence
/// p_{n,k+1} = p_{n,k} * (n-k)/(k+1) * x/(1-x), run over integer numerators.
/// The x in {0, 1} boundary is handled directly.
PmfRow pmf_row(std::size_t n, const Rational& x);
ScaledPmfRow pmf_row_scaled(std::size_t n, const Rational& x);

/// Float PMF row evaluated in log space (saddle-point form of the log-gamma
/// ratio, Loader 2000), then exponentiated.
std::vector<double> pmf_row_float(std::size_t n, double x);

/// Sum_k (x - k/n)^2 p_{n,k}(x), term by term. Equals x(1-x)/n.
Rational second_moment(std::size_t n, const Rational& x);

}  // namespace bernstein
