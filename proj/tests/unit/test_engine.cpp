#include <doctest.h>

#include <random>

#include "bernstein/binomial.hpp"
#include "bernstein/engine.hpp"
#include "bernstein/errors.hpp"

using namespace bernstein;

namespace {

const Rational kHalf(1, 2);

// Reference Bernstein value by the defining sum with direct-formula weights.
Rational reference(const GalleryFn& f, std::size_t n, const Rational& x) {
  Rational total;
  for (std::size_t k = 0; k <= n; ++k) {
    Rational w(binom(n, k));
    for (std::size_t i = 0; i < k; ++i) w *= x;
    for (std::size_t i = k; i < n; ++i) w *= Rational(1) - x;
    total += eval(f, Rational(k, n)) * w;
  }
  return total;
}

Rational random_unit(std::mt19937_64& rng) {
  const std::uint64_t q = 1 + rng() % 30;
  return Rational(rng() % (q + 1), q);
}

std::vector<GalleryFn> samples() {
  return {preset("heaviside"), preset("square"), preset("php-h"), preset("thomae-default"), preset("dirichlet"),
          make_step(Rational(1), {{Rational(1, 4), Rational(-2), std::nullopt}})};
}

}  // namespace

TEST_CASE("bernstein_eval examples") {
  CHECK(bernstein_eval(make_polynomial(Polynomial::constant(Rational(3, 7))), 9, Rational(2, 5)) == Rational(3, 7));
  CHECK(bernstein_eval(make_polynomial(Polynomial::identity()), 3, Rational(1, 3)) == Rational(1, 3));
  CHECK(bernstein_eval(preset("heaviside"), 4, kHalf) == Rational(11, 16));
  CHECK_THROWS_AS(bernstein_eval(preset("heaviside"), 0, kHalf), DomainError);
  CHECK_THROWS_AS(bernstein_eval(preset("heaviside"), 4, Rational(2)), DomainError);
  CHECK_THROWS_AS(bernstein_eval(preset("heaviside"), kExactDegreeLimit + 1, kHalf), CapacityError);
}

TEST_CASE("sampled route matches the defining sum") {
  for (const auto& f : samples()) {
    for (std::size_t n : {1u, 2u, 7u, 20u}) {
      for (const Rational& x : {Rational(0), Rational(1, 3), kHalf, Rational(5, 6), Rational(1)}) {
        REQUIRE(bernstein_eval(f, n, x) == reference(f, n, x));
      }
    }
  }
}

TEST_CASE("closed form for polynomials matches PMF summation") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    std::vector<Rational> c;
    const int d = static_cast<int>(rng() % 6);
    for (int i = 0; i <= d; ++i) c.emplace_back(static_cast<long>(rng() % 15) - 7, 1 + rng() % 4);
    const Polynomial p(c);
    const GalleryFn f = make_polynomial(p);
    for (std::size_t n : {1u, 3u, 8u, 33u}) {
      const Rational x = random_unit(rng);
      REQUIRE(bernstein_polynomial(p, BigInt(static_cast<unsigned long>(n)), x) == BernsteinSampler(f, n).exact(x));
    }
  }
  // Very large degree through the closed form only.
  const Polynomial sq = Polynomial::monomial(2);
  const BigInt big = BigInt(1) << 40;
  const Rational x(1, 3);
  CHECK(bernstein_polynomial(sq, big, x) - x * x == x * (Rational(1) - x) / Rational(big));
}

TEST_CASE("linearity, positivity and endpoint interpolation") {
  std::mt19937_64 rng(23);
  const auto fs = samples();
  for (int t = 0; t < 40; ++t) {
    const GalleryFn& f = fs[rng() % fs.size()];
    const GalleryFn& g = fs[rng() % fs.size()];
    const Rational a(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4);
    const Rational b(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4);
    const std::size_t n = 1 + rng() % 40;
    const Rational x = random_unit(rng);
    REQUIRE(bernstein_eval(linear_combination(a, f, b, g), n, x) ==
            a * bernstein_eval(f, n, x) + b * bernstein_eval(g, n, x));
    REQUIRE(bernstein_eval(f, n, Rational(0)) == eval(f, Rational(0)));
    REQUIRE(bernstein_eval(f, n, Rational(1)) == eval(f, Rational(1)));
  }
  // f <= g at the nodes (g = f + Heaviside >= f) implies B_n f <= B_n g.
  for (const auto& f : fs) {
    const GalleryFn g = sum(f, preset("heaviside"));
    for (std::size_t n : {5u, 16u}) {
      for (int i = 0; i <= 10; ++i) REQUIRE(bernstein_eval(f, n, Rational(i, 10)) <= bernstein_eval(g, n, Rational(i, 10)));
    }
  }
}

TEST_CASE("fixed points") {
  const GalleryFn one = make_polynomial(Polynomial::constant(Rational(1)));
  const GalleryFn id = make_polynomial(Polynomial::identity());
  for (std::size_t n = 1; n <= 30; ++n) {
    for (int i = 0; i <= 7; ++i) {
      const Rational x(i, 7);
      REQUIRE(bernstein_eval(one, n, x) == Rational(1));
      REQUIRE(bernstein_eval(id, n, x) == x);
    }
  }
}

TEST_CASE("float engine agrees with exact values for n <= 500") {
  for (const auto& f : samples()) {
    for (std::size_t n : {10u, 120u, 500u}) {
      for (const Rational& x : {Rational(1, 5), kHalf, Rational(7, 9)}) {
        const double e = bernstein_eval(f, n, x).to_double();
        const double a = bernstein_eval_float(f, n, x);
        if (e == 0.0) {
          REQUIRE(std::abs(a) < 1e-300);
        } else {
          REQUIRE(std::abs(a - e) / std::abs(e) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("target_value examples") {
  const Target h = target_value(preset("heaviside"), kHalf);
  CHECK(h.value == kHalf);
  CHECK(h.kind == TargetKind::JumpMidpoint);
  const Target s = target_value(preset("square"), Rational(1, 3));
  CHECK(s.value == Rational(1, 9));
  CHECK(s.kind == TargetKind::FunctionValue);
  const GalleryFn step = make_step(Rational(1), {{Rational(1, 4), Rational(-2), std::nullopt}});
  CHECK(target_value(step, Rational(1, 4)).value == Rational(0));
  CHECK(target_value(step, Rational(1, 4)).kind == TargetKind::JumpMidpoint);
  CHECK(target_value(preset("heaviside"), Rational(0)).kind == TargetKind::FunctionValue);
  CHECK(target_value(preset("php-h"), Rational(1, 3)).value == Rational(0));
  CHECK_THROWS_AS(target_value(preset("dirichlet"), kHalf), NotRegulatedError);
}

TEST_CASE("convergence reports") {
  const std::vector<std::size_t> sched{16, 32, 64, 128, 256};
  const ConvergenceReport sq = converge_report(preset("square"), kHalf, sched, Rational(1, 100));
  for (std::size_t i = 0; i < sched.size(); ++i) {
    REQUIRE(sq.errors[i] == Rational(1, 4) / Rational(sched[i]));
    REQUIRE(sq.errors[i] == abs(sq.values[i] - sq.target.value));
  }
  CHECK(sq.verdict.kind == Verdict::Kind::Converged);
  CHECK(*sq.verdict.at_n == 32);

  const ConvergenceReport hv = converge_report(preset("heaviside"), kHalf, sched, Rational(1, 10));
  for (std::size_t i = 0; i < sched.size(); ++i) {
    const std::size_t n = sched[i];
    REQUIRE(hv.errors[i] == Rational(binom(n, n / 2), BigInt(1) << static_cast<mp_bitcnt_t>(n + 1)));
  }
  CHECK(hv.verdict.kind == Verdict::Kind::Converged);

  // Against f(x0) at a Thomae support point the error stays near f(x0).
  const GalleryFn g = preset("thomae-default");
  const ConvergenceReport tv =
      converge_report(g, Rational(1, 3), sched, Rational(1, 100), Mode::Exact, Target{eval(g, Rational(1, 3))});
  CHECK(tv.verdict.kind != Verdict::Kind::Converged);
  CHECK(tv.errors.back() > Rational(1, 100));

  CHECK_THROWS_AS(converge_report(preset("square"), kHalf, {32, 16}, Rational(1, 10)), DomainError);
  CHECK_THROWS_AS(converge_report(preset("square"), kHalf, {}, Rational(1, 10)), DomainError);
  CHECK_THROWS_AS(converge_report(preset("square"), kHalf, sched, Rational(0)), DomainError);
}

TEST_CASE("judge rule") {
  const std::vector<std::size_t> s{1, 2, 3, 4};
  const Rational tol(1, 10);
  CHECK(judge(s, {Rational(1), Rational(1, 20), Rational(1, 30), Rational(1, 40)}, tol).kind == Verdict::Kind::Converged);
  CHECK(judge(s, {Rational(1), Rational(1), Rational(1), Rational(2)}, tol).kind == Verdict::Kind::NotConverged);
  CHECK(judge(s, {Rational(1), Rational(1), Rational(1, 2), Rational(1, 3)}, tol).kind == Verdict::Kind::Inconclusive);
  CHECK(judge(s, {Rational(1), Rational(1), Rational(1, 20), Rational(1, 30)}, tol).kind == Verdict::Kind::Inconclusive);
  CHECK(judge({1, 2}, {Rational(0), Rational(0)}, tol).kind == Verdict::Kind::Inconclusive);
  CHECK(default_schedule(Mode::Exact).back() == 4096u);
  CHECK(default_schedule(Mode::Float).back() == (std::size_t{1} << 20));
}

TEST_CASE("sufficient_n") {
  CHECK(sufficient_n(0, 0, 0) == 2u);
  CHECK(sufficient_n(1, 2, 3) == 1024u);
  CHECK_THROWS_AS(sufficient_n(0, 0, 62), CapacityError);
  CHECK(sufficient_n(0, 0, 61) == (std::uint64_t{1} << 62));
}

TEST_CASE("uniform_error") {
  const auto grid = uniform_grid(101);
  CHECK(uniform_error(make_polynomial(Polynomial::identity()), 37, grid) == Rational(0));
  CHECK(uniform_error(preset("square"), 100, grid) == Rational(1, 400));
  const Rational e64 = uniform_error(preset("heaviside"), 64, grid);
  const Rational e1024 = uniform_error(preset("heaviside"), 1024, grid);
  CHECK(e64 > Rational(1, 5));
  CHECK(e1024 > Rational(1, 5));
  CHECK_THROWS_AS(uniform_grid(1), DomainError);
}

TEST_CASE("error decomposition") {
  const GalleryFn c = make_polynomial(Polynomial::constant(Rational(2)));
  const ErrorDecomposition dc = error_decomposition(c, Rational(1, 3), 2, 12);
  CHECK(dc.sum_a0 == Rational(0));
  CHECK(dc.sum_a1 == Rational(0));
  CHECK(dc.sum_a2 == Rational(0));

  const GalleryFn h = preset("heaviside");
  const ErrorDecomposition dh = error_decomposition(h, kHalf, 2, 8);
  CHECK(dh.a0 == std::vector<std::size_t>{4, 5});
  CHECK(dh.a1 == std::vector<std::size_t>{3});
  CHECK(dh.a2 == std::vector<std::size_t>{0, 1, 2, 6, 7, 8});
  CHECK(dh.total() == bernstein_eval(h, 8, kHalf) - kHalf);

  CHECK(error_decomposition(preset("square"), kHalf, 1, 4).total() == Rational(1, 16));

  for (const auto& f : samples()) {
    if (f.dirichlet()) continue;
    for (std::size_t n = 1; n <= 40; ++n) {
      const ErrorDecomposition d = error_decomposition(f, Rational(2, 5), 3, n);
      REQUIRE(d.a0.size() + d.a1.size() + d.a2.size() == n + 1);
      REQUIRE(d.total() == bernstein_eval(f, n, Rational(2, 5)) - d.target.value);
    }
  }
}

TEST_CASE("halfmass and tail mass") {
  CHECK(halfmass(2, kHalf, 1) == kHalf);
  for (std::size_t n : {3u, 9u, 21u}) {
    const Rational hm = halfmass(n, kHalf, 2);
    const TailMass t = tail_mass(n, kHalf, 2);
    CHECK(abs(hm - kHalf) == t.mass / Rational(2));
  }
  CHECK(tail_mass(16, kHalf, 1).mass == Rational(2) / Rational::pow2(16));
  CHECK(std::abs(halfmass_float(10000, Rational(3, 10), 5) - 0.5) < 0.02);
  CHECK_THROWS_AS(halfmass(10, Rational(1, 8), 2), DomainError);
  CHECK_THROWS_AS(tail_mass(10, Rational(0), 2), DomainError);
  for (unsigned N0 = 2; N0 <= 3; ++N0) {
    for (std::size_t n : {8u, 64u, 512u}) {
      const TailMass t = tail_mass(n, Rational(3, 8), N0);
      REQUIRE(t.mass <= t.bound);
      REQUIRE(t.bound == Rational::pow2(2 * N0) * Rational(15, 64) / Rational(static_cast<long>(n)));
    }
  }
}

TEST_CASE("midpoint bound check") {
  const std::vector<std::size_t> sched{256, 512, 1024, 2048, 4096};
  CHECK(midpoint_bound_check(preset("heaviside"), kHalf, sched, Rational(1, 50)));
  CHECK(midpoint_bound_check(preset("square"), Rational(1, 3), sched, Rational(1, 100)));
  const PiecewiseFn spike = PiecewiseFn::create({Rational(0), kHalf, Rational(1)}, {Polynomial(), Polynomial()},
                                                {Rational(0), Rational(5), Rational(0)});
  CHECK_FALSE(midpoint_bound_check(spike, kHalf, sched, Rational(1, 5)));
  CHECK_THROWS_AS(midpoint_bound_check(preset("heaviside"), kHalf, {4, 8, 16}, Rational(1, 1000)), InconclusiveError);
}
