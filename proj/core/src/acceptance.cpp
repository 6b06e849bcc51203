#include "bernstein/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "bernstein/binomial.hpp"
#include "bernstein/discontinuity.hpp"
#include "bernstein/errors.hpp"
#include "bernstein/report_io.hpp"
#include "bernstein/variation.hpp"

namespace bernstein {
namespace {

struct Outcome {
  CriterionStatus status = CriterionStatus::Pass;
  std::string detail;
};

Outcome pass(std::string d) { return {CriterionStatus::Pass, std::move(d)}; }
Outcome fail(std::string d) { return {CriterionStatus::Fail, std::move(d)}; }
Outcome inconclusive(std::string d) { return {CriterionStatus::Inconclusive, std::move(d)}; }

std::size_t capped(std::size_t n, const AcceptanceOptions& o) {
  return o.schedule_cap ? std::min(n, *o.schedule_cap) : n;
}

// Raw engine output only: the standard distributions are not portable.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

Outcome pmf_identities(const AcceptanceOptions& o) {
  std::mt19937_64 rng(o.seed * 1000 + 1);
  const std::size_t top = capped(200, o);
  for (int t = 0; t < 50; ++t) {
    const std::uint64_t q = 1 + draw(rng, 96);
    const Rational x(draw(rng, q + 1), q);
    for (std::size_t n = 1; n <= top; ++n) {
      const ScaledPmfRow row = pmf_row_scaled(n, x);
      BigInt total(0);
      for (const auto& w : row.numerators) {
        if (w < 0) return fail("negative weight at n=" + std::to_string(n) + ", x=" + x.str());
        total += w;
      }
      if (total != row.denominator) return fail("weights do not sum to 1 at n=" + std::to_string(n) + ", x=" + x.str());
      if (second_moment(n, x) != x * (Rational(1) - x) / Rational(n)) {
        return fail("second moment differs from x(1-x)/n at n=" + std::to_string(n) + ", x=" + x.str());
      }
    }
  }
  const std::string d = "50 seeded x, n=1.." + std::to_string(top) + ": sum = 1 and second moment = x(1-x)/n";
  return top < 200 ? inconclusive(d + " (capped)") : pass(d);
}

Outcome quadratic_closed_form(const AcceptanceOptions& o) {
  const GalleryFn square = preset("square");
  const Polynomial p = Polynomial::monomial(2);
  const std::vector<Rational> grid = uniform_grid(33);
  const std::size_t top = capped(128, o);
  for (std::size_t n = 2; n <= top; ++n) {
    const BernsteinSampler sampler(square, n);
    for (const auto& x : grid) {
      const Rational expected = x * (Rational(1) - x) / Rational(n);
      if (sampler.exact(x) - x * x != expected) return fail("PMF sum mismatch at n=" + std::to_string(n) + ", x=" + x.str());
      if (bernstein_polynomial(p, BigInt(static_cast<unsigned long>(n)), x) - x * x != expected) {
        return fail("closed form mismatch at n=" + std::to_string(n) + ", x=" + x.str());
      }
    }
  }
  const std::string d = "n=2.." + std::to_string(top) + " on 33 points, PMF sum and closed form";
  return top < 128 ? inconclusive(d + " (capped)") : pass(d);
}

Outcome uniform_bound(const AcceptanceOptions&) {
  const GalleryFn square = preset("square");
  const std::vector<Rational> grid = uniform_grid(65);
  std::ostringstream os;
  for (std::uint64_t k0 = 1; k0 <= 6; ++k0) {
    const std::uint64_t n = sufficient_n(1, k0 + 2, k0);
    const Rational err = uniform_error(square, n, grid);
    if (Rational::pow2(-static_cast<long>(k0)) < err) {
      return fail("k0=" + std::to_string(k0) + ", n=" + std::to_string(n) + ": error " + err.str());
    }
    os << (k0 > 1 ? " " : "") << "k0=" << k0 << ":n=2^" << (3 * k0 + 7) << ",err=" << err.str();
  }
  return pass(os.str());
}

Outcome jump_midpoint(const AcceptanceOptions& o) {
  const GalleryFn h = preset("heaviside");
  const Rational half(1, 2);
  const std::size_t top = capped(4096, o);
  Rational last;
  std::size_t last_n = 0;
  for (std::size_t n = 2; n <= top; n += 2) {
    const Rational err = abs(bernstein_eval(h, n, half) - half);
    const Rational oracle(binom(n, n / 2), BigInt(1) << static_cast<mp_bitcnt_t>(n + 1));
    if (err != oracle) return fail("n=" + std::to_string(n) + ": error differs from C(n,n/2)/2^(n+1)");
    last = err;
    last_n = n;
  }
  const std::string d = "even n<=" + std::to_string(top) + " match C(n,n/2)/2^(n+1); error at n=" +
                        std::to_string(last_n) + " is " + format_double(last.to_double());
  if (top < 4096) return inconclusive(d + " (capped before 2^12)");
  return last < Rational(1, 50) ? pass(d) : fail(d + " >= 0.02");
}

Outcome half_mass(const AcceptanceOptions& o) {
  const std::size_t n = 10000;
  if (capped(n, o) < n) return inconclusive("degree 10^4 is above the schedule cap");
  const double m = halfmass_float(n, Rational(3, 10), 5);
  const std::string d = "halfmass(10^4, 3/10, N0=5) = " + format_double(m);
  return std::abs(m - 0.5) < 0.02 ? pass(d) : fail(d);
}

Outcome tail_bound(const AcceptanceOptions& o) {
  std::mt19937_64 rng(o.seed * 1000 + 6);
  const std::size_t top = capped(400, o);
  for (int t = 0; t < 100; ++t) {
    const unsigned N0 = 1 + static_cast<unsigned>(draw(rng, 4));
    // x0 = p/q with q = 2^N0 m keeps x0 and 1 - x0 at least m/q = 2^-N0.
    const std::uint64_t m = 1 + draw(rng, 24);
    const std::uint64_t q = (std::uint64_t{1} << N0) * m;
    const std::uint64_t p = m + draw(rng, q - 2 * m + 1);
    const Rational x0(p, q);
    const std::size_t n = 1 + draw(rng, top);
    try {
      const TailMass tm = tail_mass(n, x0, N0);
      if (tm.bound < tm.mass) return fail("bound violated");
    } catch (const ConsistencyError& e) {
      return fail(std::string("n=") + std::to_string(n) + ", x0=" + x0.str() + ": " + e.what());
    }
  }
  return pass("100 seeded (n<=" + std::to_string(top) + ", x0, N0<=4) triples within 2^(2N0) x0(1-x0)/n");
}

Outcome thomae_vanishing(const AcceptanceOptions& o) {
  const GalleryFn f = preset("thomae-default");
  const ThomaeFn& t = *f.thomae();
  for (const auto& x : t.support().points()) {
    if (!(eval(f, x).sign() > 0)) return fail("f vanishes at support point " + x.str());
  }
  const std::size_t n = capped(4096, o);
  const BernsteinSampler sampler(f, n);
  double worst = 0.0;
  Rational worst_exact;
  for (const auto& x : uniform_grid(65)) {
    if (o.mode == Mode::Exact) {
      worst_exact = max(worst_exact, abs(sampler.exact(x)));
    } else {
      worst = std::max(worst, std::abs(sampler.approx(x)));
    }
  }
  const bool ok = o.mode == Mode::Exact ? worst_exact < Rational(1, 64) : worst < 1.0 / 64;
  if (o.mode == Mode::Exact) worst = worst_exact.to_double();
  const std::string d = "f > 0 on all 64 support points; max |B_" + std::to_string(n) + "| on 65 points = " +
                        format_double(worst) + " (" + std::string(mode_name(o.mode)) + ")";
  if (n < 4096) return inconclusive(d + (ok ? " (capped, below 2^-6)" : " (capped)"));
  return ok ? pass(d) : fail(d + " >= 2^-6");
}

Outcome decomposition(const AcceptanceOptions& o) {
  const std::vector<Rational> probes{Rational(1, 7), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(5, 6)};
  const std::size_t top = capped(256, o);
  for (const auto& name : preset_names()) {
    const GalleryFn f = preset(name);
    for (const auto& x0 : probes) {
      std::optional<Target> target;
      if (f.dirichlet()) target = Target{eval(f, x0), TargetKind::FunctionValue};
      for (std::size_t n = 1; n <= top; ++n) {
        const ErrorDecomposition d = error_decomposition(f, x0, 3, n, target);
        if (d.a0.size() + d.a1.size() + d.a2.size() != n + 1) {
          return fail(name + ": index sets do not partition 0..n at n=" + std::to_string(n));
        }
        if (d.total() != bernstein_eval(f, n, x0) - d.target.value) {
          return fail(name + ": sums miss B_n - target at n=" + std::to_string(n) + ", x0=" + x0.str());
        }
      }
    }
  }
  const std::string d = "5 presets x 5 points x n=1.." + std::to_string(top) + " (dirichlet against f(x0))";
  return top < 256 ? inconclusive(d + " (capped)") : pass(d);
}

std::vector<std::pair<std::string, GalleryFn>> jordan_fixtures() {
  const Rational h(1, 2);
  const Polynomial x = Polynomial::identity();
  const Polynomial one = Polynomial::constant(Rational(1));
  // x^3/3 - x^2/2 + 3x/16 turns at 1/4 and 3/4.
  const Polynomial cubic({Rational(0), Rational(3, 16), Rational(-1, 2), Rational(1, 3)});
  std::vector<std::pair<std::string, GalleryFn>> out;
  out.emplace_back("heaviside", make_heaviside(h, Rational(1)));
  out.emplace_back("heaviside-low", make_heaviside(h, Rational(0)));
  out.emplace_back("hump", make_polynomial(x * (one - x)));
  out.emplace_back("square", make_polynomial(x * x));
  out.emplace_back("cubic", make_polynomial(cubic));
  out.emplace_back("steps", make_step(Rational(0), {{Rational(1, 4), Rational(1), std::nullopt},
                                                    {Rational(1, 2), Rational(-2), Rational(3)},
                                                    {Rational(3, 4), Rational(1, 2), std::nullopt}}));
  out.emplace_back("indicator", make_indicator({Rational(1, 3), Rational(1, 2)}));
  out.emplace_back("spike", PiecewiseFn::create({Rational(0), h, Rational(1)}, {one - x, x * x},
                                                {Rational(1), Rational(5), Rational(1)}));
  out.emplace_back("mixed", PiecewiseFn::create({Rational(0), Rational(1, 3), Rational(2, 3), Rational(1)},
                                                {x * x, Polynomial::constant(Rational(-1)), cubic},
                                                {Rational(0), Rational(0), Rational(2), cubic(Rational(1))}));
  out.emplace_back("heaviside-minus-square", difference(make_heaviside(h, h), make_polynomial(x * x)));
  return out;
}

Outcome jordan(const AcceptanceOptions&) {
  const auto fixtures = jordan_fixtures();
  for (const auto& [name, f] : fixtures) {
    const auto [g, hh] = jordan_decompose(f);
    std::set<Rational> probe_set;
    for (int i = 0; i < 1000; ++i) probe_set.insert(Rational(i, 999));
    for (const auto& b : g.breakpoints()) probe_set.insert(b);
    const std::vector<Rational> probes(probe_set.begin(), probe_set.end());
    if (!g.eval(Rational(0)).is_zero()) return fail(name + ": g(0) != 0");
    if (!nondecreasing_on(g, probes)) return fail(name + ": g decreases");
    if (!nondecreasing_on(hh, probes)) return fail(name + ": h decreases");
    for (const auto& x : probes) {
      if (g.eval(x) - hh.eval(x) != eval(f, x)) return fail(name + ": f != g - h at " + x.str());
    }
  }
  return pass(std::to_string(fixtures.size()) + " fixtures, g and h nondecreasing, f = g - h on 1000+ probes");
}

Outcome jump_bound(const AcceptanceOptions&) {
  std::vector<std::pair<std::string, GalleryFn>> fixtures;
  fixtures.emplace_back("heaviside", preset("heaviside"));
  fixtures.emplace_back("square", preset("square"));
  std::vector<StepJump> eighths, halving;
  for (int i = 1; i <= 8; ++i) eighths.push_back({Rational(i, 9), Rational(1, 8), std::nullopt});
  for (int i = 0; i < 10; ++i) halving.push_back({Rational(i + 1, 11), Rational::pow2(-i - 1), std::nullopt});
  fixtures.emplace_back("eighths", make_step(Rational(0), eighths));
  fixtures.emplace_back("halving", make_step(Rational(0), halving));
  {
    std::vector<Rational> bps{Rational(0)}, values{Rational(0)};
    for (int i = 1; i <= 8; ++i) {
      bps.emplace_back(i, 9);
      values.emplace_back(1, 16);
    }
    bps.emplace_back(1);
    values.emplace_back(0);
    fixtures.emplace_back("spikes", PiecewiseFn::create(bps, std::vector<Polynomial>(bps.size() - 1), values));
  }
  fixtures.emplace_back("thomae", make_thomae(HeightedSet({Rational(1, 4), Rational(1, 2), Rational(3, 4)}, {1, 2, 2})));
  std::ostringstream os;
  for (const auto& [name, f] : fixtures) {
    const auto bv = classify(f).bv;
    if (!bv.variation || Rational(1) < *bv.variation) return fail(name + ": fixture variation exceeds 1");
    std::size_t largest = 0;
    for (unsigned k = 0; k <= 10; ++k) {
      const JumpSet d = jump_set(f, k);
      if (d.points.size() > (std::size_t{1} << k)) return fail(name + ": |D_" + std::to_string(k) + "| > 2^k");
      largest = d.points.size();
    }
    os << (os.tellp() > 0 ? " " : "") << name << ":|D_10|=" << largest;
  }
  return pass(os.str());
}

Outcome rational_sampling(const AcceptanceOptions& o) {
  const GalleryFn h = preset("php-h");
  const GalleryFn restricted = rational_restriction(*h.thomae());
  std::vector<Rational> grid = uniform_grid(33);
  for (const auto& x : h.thomae()->support().points()) grid.push_back(x);
  const std::size_t top = capped(256, o);
  for (std::size_t n = 1; n <= top; ++n) {
    const BernsteinSampler a(h, n), b(restricted, n);
    for (const auto& x : grid) {
      if (a.exact(x) != b.exact(x)) return fail("n=" + std::to_string(n) + ", x=" + x.str());
    }
  }
  const std::string d = "n=1.." + std::to_string(top) + " on " + std::to_string(grid.size()) + " points";
  return top < 256 ? inconclusive(d + " (capped)") : pass(d);
}

Outcome riemann(const AcceptanceOptions&) {
  const GalleryFn h = preset("php-h");
  std::ostringstream os;
  for (int n0 = 0; n0 <= 8; ++n0) {
    const Rational s = riemann_sum(h, Rational::pow2(-n0 - 2), TagRule::AdversarialMaxOsc);
    if (!(abs(s) < Rational::pow2(-n0))) return fail("n0=" + std::to_string(n0) + ": |S| = " + s.str());
    os << (n0 ? " " : "") << s.str();
  }
  return pass("adversarial sums for n0=0..8: " + os.str());
}

Outcome cover_budgets(const AcceptanceOptions& o) {
  std::mt19937_64 rng(o.seed * 1000 + 13);
  auto random_point = [&rng] {
    const std::uint64_t q = 1 + draw(rng, 64);
    return Rational(draw(rng, q + 1), q);
  };
  for (int t = 0; t < 50; ++t) {
    const Rational eps(1 + draw(rng, 100), 1 + draw(rng, 100));
    std::vector<std::vector<Rational>> sets(t % 2 == 0 ? 1 : 1 + draw(rng, 5));
    for (auto& s : sets) {
      const std::size_t m = 1 + draw(rng, 20);
      for (std::size_t i = 0; i < m; ++i) s.push_back(random_point());
    }
    const IntervalCover c = t % 2 == 0 ? cover(sets[0], eps) : cover_union(sets, eps);
    Rational sum;
    for (const auto& [a, b] : c.intervals) sum += b - a;
    if (sum != c.total_length) return fail("instance " + std::to_string(t) + ": total_length is not the sum");
    if (!(c.total_length < eps)) return fail("instance " + std::to_string(t) + ": total " + c.total_length.str());
    for (const auto& s : sets) {
      if (!covers_all(c, s)) return fail("instance " + std::to_string(t) + ": a point is uncovered");
    }
  }
  return pass("50 seeded covers below budget and exhaustive");
}

struct Spec {
  int id;
  const char* title;
  double budget;
  std::function<Outcome(const AcceptanceOptions&)> run;
};

const std::vector<Spec>& specs() {
  static const std::vector<Spec> all{
      {1, "exact PMF identities", 30, pmf_identities},
      {2, "quadratic closed form", 10, quadratic_closed_form},
      {3, "explicit uniform bound", 20, uniform_bound},
      {4, "jump-midpoint law", 30, jump_midpoint},
      {5, "half-mass limit", 5, half_mass},
      {6, "tail bound certification", 20, tail_bound},
      {7, "Thomae vanishing", 60, thomae_vanishing},
      {8, "error decomposition completeness", 30, decomposition},
      {9, "Jordan decomposition", 30, jordan},
      {10, "BV jump-count bound", 10, jump_bound},
      {11, "rational-sampling equality", 10, rational_sampling},
      {12, "Riemann-sum vanishing", 20, riemann},
      {13, "cover budgets", 5, cover_budgets},
  };
  return all;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  const auto& all = specs();
  const auto it = std::find_if(all.begin(), all.end(), [id](const Spec& s) { return s.id == id; });
  if (it == all.end()) throw DomainError("no criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.title = it->title;
  r.budget_seconds = it->budget;
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = it->run(options);
  } catch (const Error& e) {
    out = fail(std::string(e.kind()) + ": " + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.status = out.status;
  r.detail = std::move(out.detail);
  if (r.seconds > r.budget_seconds) {
    r.status = CriterionStatus::Fail;
    r.detail += " [over the time budget]";
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  auto run_all = [&options] {
    std::vector<CriterionResult> rs;
    for (const auto& s : specs()) rs.push_back(run_criterion(s.id, options));
    return rs;
  };
  std::vector<CriterionResult> results = run_all();
  CriterionResult det;
  det.id = 14;
  det.title = "determinism";
  const auto start = std::chrono::steady_clock::now();
  const std::string first = render_acceptance(results);
  const std::string second = render_acceptance(run_all());
  det.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  det.budget_seconds = 0;
  for (const auto& r : results) det.budget_seconds += r.budget_seconds;
  det.status = first == second ? CriterionStatus::Pass : CriterionStatus::Fail;
  det.detail = first == second ? "second run of criteria 1-13 rendered byte-identically"
                               : "second run of criteria 1-13 rendered differently";
  results.push_back(std::move(det));
  return results;
}

std::string status_name(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::Pass:
      return "PASS";
    case CriterionStatus::Fail:
      return "FAIL";
    case CriterionStatus::Inconclusive:
      break;
  }
  return "INCONCLUSIVE";
}

std::string render_acceptance(const std::vector<CriterionResult>& results, bool with_timing) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << "criterion " << r.id << ' ' << status_name(r.status) << ' ' << r.title << ": " << r.detail;
    if (with_timing) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " (%.2fs of %.0fs)", r.seconds, r.budget_seconds);
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

bool acceptance_passed(const std::vector<CriterionResult>& results, bool allow_inconclusive) {
  return std::all_of(results.begin(), results.end(), [&](const CriterionResult& r) {
    return r.status == CriterionStatus::Pass || (allow_inconclusive && r.status == CriterionStatus::Inconclusive);
  });
}

}  // namespace bernstein
