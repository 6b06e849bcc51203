#include <doctest.h>

#include <random>

#include "bernstein/errors.hpp"
#include "bernstein/variation.hpp"

using namespace bernstein;

namespace {

const Rational kHalf(1, 2);

std::vector<Rational> grid_of(std::size_t steps) {
  std::vector<Rational> g;
  for (std::size_t i = 0; i <= steps; ++i) g.emplace_back(static_cast<long>(i), static_cast<long>(steps));
  return g;
}

GalleryFn cubic() {
  return make_polynomial(Polynomial({Rational(0), Rational(3, 16), Rational(-1, 2), Rational(1, 3)}));
}

}  // namespace

TEST_CASE("variation examples") {
  const VariationEntry h = variation(preset("heaviside"), Rational(1), {Rational(0), kHalf, Rational(1)});
  CHECK(h.value == Rational(1));
  CHECK(h.flag == VariationFlag::Exact);
  const VariationEntry hl = variation(preset("heaviside"), Rational(1), {Rational(1, 4), Rational(3, 4)});
  CHECK(hl.value == Rational(1));
  CHECK(hl.flag == VariationFlag::LowerBound);
  CHECK(variation(make_heaviside(kHalf, Rational(5)), Rational(1), {kHalf}).value == Rational(9));
  CHECK(variation(preset("square"), Rational(1), {}).value == Rational(1));
  CHECK(variation(preset("square"), kHalf, {}).value == Rational(1, 4));
  const VariationEntry c = variation(cubic(), Rational(1), {});
  CHECK(c.value == Rational(1, 16));
  CHECK(c.flag == VariationFlag::Exact);
  CHECK(variation(cubic(), Rational(1, 4), {}).value == Rational(1, 48));
  CHECK_THROWS_AS(variation(preset("square"), Rational(1), {kHalf, Rational(1, 4)}), DomainError);
  CHECK_THROWS_AS(variation(preset("square"), kHalf, {Rational(3, 4)}), DomainError);
  CHECK_THROWS_AS(variation(preset("square"), Rational(0), {}), DomainError);
}

TEST_CASE("grid sums grow under refinement") {
  for (const auto& f : {preset("thomae-default"), preset("php-h"), preset("dirichlet")}) {
    Rational prev;
    for (std::size_t steps : {2u, 4u, 8u, 16u, 32u, 64u}) {
      const VariationEntry e = variation(f, Rational(1), grid_of(steps));
      REQUIRE(e.flag == VariationFlag::LowerBound);
      REQUIRE(prev <= e.value);
      prev = e.value;
    }
  }
}

TEST_CASE("variation profile") {
  const VariationProfile p = variation_profile(cubic(), {Rational(0), Rational(1, 4), kHalf, Rational(3, 4), Rational(1)});
  CHECK(p.flag == VariationFlag::Exact);
  CHECK(p.cumulative == std::vector<Rational>{Rational(0), Rational(1, 48), Rational(1, 48) + Rational(1, 96),
                                              Rational(1, 24), Rational(1, 16)});
  const VariationProfile t = variation_profile(preset("thomae-default"), grid_of(16));
  CHECK(t.flag == VariationFlag::LowerBound);
  for (std::size_t i = 1; i < t.cumulative.size(); ++i) CHECK(t.cumulative[i - 1] <= t.cumulative[i]);
}

TEST_CASE("Jordan decomposition") {
  const std::vector<GalleryFn> fixtures{
      preset("heaviside"), preset("square"), cubic(), make_heaviside(kHalf, Rational(5)),
      make_step(Rational(1), {{Rational(1, 4), Rational(-2), Rational(3)}, {Rational(2, 3), Rational(1, 2), std::nullopt}}),
      make_indicator({Rational(1, 5), Rational(4, 5)})};
  const std::vector<Rational> probes = grid_of(120);
  for (const auto& f : fixtures) {
    const auto [g, h] = jordan_decompose(f);
    const std::vector<Rational> bps = as_piecewise(f)->breakpoints();
    CHECK(eval(g, Rational(0)) == Rational(0));
    CHECK(eval(g, Rational(1)) == variation(f, Rational(1), bps).value);
    CHECK(nondecreasing_on(g, probes));
    CHECK(nondecreasing_on(h, probes));
    for (const auto& x : probes) REQUIRE(eval(g, x) - eval(h, x) == eval(f, x));
    for (const auto& b : bps) REQUIRE(eval(g, b) - eval(h, b) == eval(f, b));
  }
  const auto [g, h] = jordan_decompose(preset("heaviside"));
  CHECK(eval(g, kHalf) == Rational(1));
  CHECK(eval(h, Rational(1)) == Rational(0));
  CHECK_THROWS_AS(jordan_decompose(make_polynomial(Polynomial({Rational(0), Rational(-1), Rational(0), Rational(1)}))),
                  NeedsBreakpointsError);
  CHECK_THROWS_AS(jordan_decompose(preset("dirichlet")), DomainError);
}

TEST_CASE("Helly selection") {
  const std::vector<Rational> grid = grid_of(8);
  std::vector<GalleryFn> same(5, preset("square"));
  CHECK(helly_select(same, grid, Rational(1, 100)) == std::vector<std::size_t>{0, 1, 2, 3, 4});

  std::vector<GalleryFn> alternating;
  for (int i = 0; i < 6; ++i) alternating.push_back(make_polynomial(Polynomial::constant(Rational(i % 2 == 0 ? 1 : -1))));
  CHECK(helly_select(alternating, grid, Rational(1, 2)) == std::vector<std::size_t>{0, 2, 4});

  std::vector<GalleryFn> indicators;
  for (long n = 0; n < 8; ++n) indicators.push_back(make_indicator({Rational(1, n + 2)}));
  CHECK(helly_select(indicators, {Rational(1, 3), kHalf}, Rational(1, 4)) ==
        std::vector<std::size_t>{2, 3, 4, 5, 6, 7});

  std::vector<GalleryFn> two(2, preset("square"));
  try {
    helly_select(two, grid, Rational(1, 10));
    FAIL("expected InconclusiveError");
  } catch (const InconclusiveError& e) {
    CHECK(e.best_effort() == std::vector<std::size_t>{0, 1});
  }

  // Every survivor pair agrees within tol on the grid.
  std::mt19937_64 rng(3);
  std::vector<GalleryFn> random;
  for (int i = 0; i < 40; ++i) {
    random.push_back(make_heaviside(Rational(1 + static_cast<long>(rng() % 7), 8), Rational(static_cast<long>(rng() % 2))));
  }
  const Rational tol(1, 2);
  const auto keep = helly_select(random, grid, tol);
  for (std::size_t a : keep) {
    for (std::size_t b : keep) {
      for (const auto& x : grid) REQUIRE(abs(eval(random[a], x) - eval(random[b], x)) < tol);
    }
  }
}

TEST_CASE("Helly witness") {
  std::vector<GalleryFn> fs;
  for (long n = 1; n <= 5; ++n) {
    std::vector<Rational> pts;
    for (long i = 1; i <= n; ++i) pts.emplace_back(i, n + 1);
    fs.push_back(make_indicator(pts));
  }
  CHECK(helly_witness(fs) == std::vector<std::uint64_t>{2, 4, 6, 8, 10});
  CHECK(helly_witness({make_polynomial(Polynomial::constant(Rational(7)))}) == std::vector<std::uint64_t>{0});
  std::vector<GalleryFn> halves;
  for (long n = 0; n < 4; ++n) halves.push_back(make_step(Rational(0), {{kHalf, Rational(2 * n + 1, 2), std::nullopt}}));
  CHECK(helly_witness(halves) == std::vector<std::uint64_t>{0, 1, 2, 3});
}

TEST_CASE("Riemann sums") {
  const GalleryFn id = make_polynomial(Polynomial::identity());
  CHECK(riemann_sum(id, Rational(1, 4), TagRule::LeftEndpoint) == Rational(3, 8));
  CHECK(riemann_sum(id, Rational(1, 4), TagRule::Midpoint) == kHalf);
  CHECK(riemann_sum(id, Rational(1, 3), TagRule::AdversarialMaxOsc) == Rational(2, 3));
  // Last cell clipped at 1.
  CHECK(riemann_sum(make_polynomial(Polynomial::constant(Rational(3))), Rational(2, 5), TagRule::LeftEndpoint) ==
        Rational(3));
  const GalleryFn h = preset("php-h");
  for (long k = 4; k <= 12; ++k) {
    const Rational mesh = Rational::pow2(-k);
    CHECK(riemann_sum(h, mesh, TagRule::LeftEndpoint) == Rational(0));
    CHECK(riemann_sum(h, mesh, TagRule::Midpoint) == Rational(0));
    const Rational adv = riemann_sum(h, mesh, TagRule::AdversarialMaxOsc);
    CHECK(adv > Rational(0));
    CHECK(adv <= Rational(2) * mesh);
  }
  CHECK_THROWS_AS(riemann_sum(id, Rational(0), TagRule::Midpoint), DomainError);
}
