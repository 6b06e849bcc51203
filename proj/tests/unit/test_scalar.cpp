#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "bernstein/binomial.hpp"
#include "bernstein/errors.hpp"
#include "bernstein/rational.hpp"

using namespace bernstein;

namespace {

// Independent oracle: Pascal's triangle in 64-bit integers (exact for n <= 62).
std::vector<std::vector<std::uint64_t>> pascal(unsigned rows) {
  std::vector<std::vector<std::uint64_t>> t(rows + 1);
  for (unsigned n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, 1);
    for (unsigned k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

Rational rpow(const Rational& x, std::size_t e) {
  Rational r(1);
  for (std::size_t i = 0; i < e; ++i) r *= x;
  return r;
}

// Direct formula C(n,k) x^k (1-x)^(n-k), no recurrence.
Rational direct_pmf(std::size_t n, std::size_t k, const Rational& x) {
  return Rational(binom(n, k)) * rpow(x, k) * rpow(Rational(1) - x, n - k);
}

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  const Rational a(6, 8);
  CHECK(a.numerator() == 3);
  CHECK(a.denominator() == 4);
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(3, 4)).str() == "1/2");
  CHECK(Rational(-4, -8) == Rational(1, 2));
  CHECK(Rational(0).str() == "0/1");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DomainError);
}

TEST_CASE("rational parsing is strict") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(Rational::parse("0.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
}

TEST_CASE("from_double is exact and pow2 handles both signs") {
  CHECK(Rational::from_double(0.375) == Rational(3, 8));
  CHECK(Rational::from_double(0.1) != Rational(1, 10));
  CHECK(Rational::from_double(0.1).to_double() == 0.1);
  CHECK(Rational::pow2(10) == Rational(1024));
  CHECK(Rational::pow2(-3) == Rational(1, 8));
  CHECK(Rational::pow2(0) == Rational(1));
}

TEST_CASE("floor, sign and simplest_between") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-1, 3).sign() == -1);
  CHECK(simplest_between(Rational(1, 3), Rational(3, 5)) == Rational(1, 2));
  CHECK(simplest_between(Rational(2, 7), Rational(2, 7)) == Rational(2, 7));
  CHECK(simplest_between(Rational(13, 50), Rational(3, 10)) == Rational(2, 7));
}

TEST_CASE("parse_count accepts decimals and powers of two") {
  CHECK(parse_count("4096") == 4096u);
  CHECK(parse_count("2^10") == 1024u);
  CHECK_THROWS_AS(parse_count("2^64"), ParseError);
  CHECK_THROWS_AS(parse_count("-3"), ParseError);
}

TEST_CASE("binom against the Pascal oracle") {
  const auto t = pascal(62);
  for (unsigned n = 0; n <= 62; ++n) {
    for (unsigned k = 0; k <= n; ++k) REQUIRE(binom(n, k) == BigInt(static_cast<unsigned long>(t[n][k])));
  }
  CHECK(binom(4, 2) == 6);
  CHECK(binom(17, 0) == 1);
  CHECK(binom(50, 25) == BigInt(static_cast<unsigned long>(t[50][25])));
  CHECK(t[50][25] == 126410606437752ull);
  CHECK_THROWS_AS(binom(3, 4), DomainError);
}

TEST_CASE("pmf_row small cases") {
  CHECK(pmf_row(2, Rational(1, 2)).weights == std::vector<Rational>{Rational(1, 4), Rational(1, 2), Rational(1, 4)});
  CHECK(pmf_row(3, Rational(0)).weights == std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(0)});
  CHECK(pmf_row(3, Rational(1)).weights == std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(1)});
  CHECK(pmf_row(4, Rational(1, 3)).weights ==
        std::vector<Rational>{Rational(16, 81), Rational(32, 81), Rational(24, 81), Rational(8, 81), Rational(1, 81)});
  CHECK_THROWS_AS(pmf_row(3, Rational(3, 2)), DomainError);
  CHECK_THROWS_AS(pmf_row(3, Rational(-1, 2)), DomainError);
  CHECK_THROWS_AS(pmf_row(kExactDegreeLimit + 1, Rational(1, 2)), CapacityError);
}

TEST_CASE("pmf_row matches the direct formula") {
  for (std::size_t n : {1u, 5u, 12u, 40u}) {
    for (const Rational& x : {Rational(1, 7), Rational(2, 3), Rational(5, 11), Rational(1, 2)}) {
      const PmfRow row = pmf_row(n, x);
      for (std::size_t k = 0; k <= n; ++k) REQUIRE(row.weights[k] == direct_pmf(n, k, x));
    }
  }
}

TEST_CASE("scaled row uses the q^n denominator") {
  const ScaledPmfRow r = pmf_row_scaled(4, Rational(1, 3));
  CHECK(r.denominator == 81);
  CHECK(r.numerators == std::vector<BigInt>{16, 32, 24, 8, 1});
}

TEST_CASE("PMF identities over a seeded sweep") {
  std::mt19937_64 rng(20240611);
  for (int t = 0; t < 50; ++t) {
    const std::uint64_t q = 1 + rng() % 40;
    const Rational x(rng() % (q + 1), q);
    for (std::size_t n = 1; n <= 60; ++n) {
      const PmfRow row = pmf_row(n, x);
      Rational total;
      for (const auto& w : row.weights) {
        REQUIRE(w.sign() >= 0);
        total += w;
      }
      REQUIRE(total == Rational(1));
      REQUIRE(second_moment(n, x) == x * (Rational(1) - x) / Rational(n));
    }
  }
}

TEST_CASE("second_moment examples") {
  CHECK(second_moment(2, Rational(1, 2)) == Rational(1, 8));
  CHECK(second_moment(9, Rational(0)) == Rational(0));
  CHECK(second_moment(10, Rational(1, 3)) == Rational(1, 45));
  CHECK_THROWS_AS(second_moment(0, Rational(1, 3)), DomainError);
}

TEST_CASE("float PMF rows") {
  const auto r = pmf_row_float(2, 0.5);
  CHECK(r[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(r[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r[2] == doctest::Approx(0.25).epsilon(1e-12));

  for (std::size_t n : {1000u, 100000u}) {
    const auto w = pmf_row_float(n, 0.3);
    double s = 0;
    for (double v : w) s += v;
    CHECK(std::abs(s - 1.0) < 1e-10);
  }

  const auto big = pmf_row_float(100000, 0.3);
  const auto mode = static_cast<long>(std::max_element(big.begin(), big.end()) - big.begin());
  CHECK(std::labs(mode - 30000) <= 1);
  CHECK_THROWS_AS(pmf_row_float(kFloatDegreeLimit + 1, 0.5), DomainError);
  CHECK_THROWS_AS(pmf_row_float(0, 0.5), DomainError);
  CHECK_THROWS_AS(pmf_row_float(10, 1.5), DomainError);
}

TEST_CASE("float row agrees with the exact row for n <= 500") {
  for (std::size_t n : {1u, 7u, 64u, 250u, 500u}) {
    for (const Rational& x : {Rational(3, 10), Rational(1, 2), Rational(7, 9), Rational(1, 64)}) {
      const PmfRow exact = pmf_row(n, x);
      const auto approx = pmf_row_float(n, x.to_double());
      for (std::size_t k = 0; k <= n; ++k) {
        const double e = exact.weights[k].to_double();
        if (e < 1e-250) continue;
        REQUIRE(std::abs(approx[k] - e) / e < 1e-9);
      }
    }
  }
}
