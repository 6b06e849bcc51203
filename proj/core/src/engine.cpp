#include "bernstein/engine.hpp"

#include <algorithm>

#include "bernstein/binomial.hpp"
#include "bernstein/errors.hpp"

namespace bernstein {
namespace {

void require_unit_interval(const Rational& x) {
  if (x.sign() < 0 || x > Rational(1)) throw DomainError("x = " + x.str() + " lies outside [0,1]");
}

void require_window(const Rational& x0, unsigned N0) {
  if (!(x0.sign() > 0 && x0 < Rational(1))) throw DomainError("x0 must lie in (0,1)");
  if (Rational::pow2(-static_cast<long>(N0)) > min(x0, Rational(1) - x0)) {
    throw DomainError("window 2^-" + std::to_string(N0) + " around " + x0.str() + " exceeds [0,1]");
  }
}

std::optional<Polynomial> polynomial_of(const GalleryFn& f) {
  if (const auto* p = f.piecewise()) return p->as_polynomial();
  return std::nullopt;
}

}  // namespace

BernsteinSampler::BernsteinSampler(const GalleryFn& f, std::size_t n) : n_(n) {
  if (n < 1) throw DomainError("Bernstein degree must be at least 1");
  if (n > kFloatDegreeLimit) {
    throw CapacityError("sampling f at k/n for n = " + std::to_string(n) + " exceeds the limit of " +
                        std::to_string(kFloatDegreeLimit));
  }
  samples_.reserve(n + 1);
  samples_f_.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    samples_.push_back(eval(f, Rational(k, n)));
    samples_f_.push_back(samples_.back().to_double());
  }
}

Rational BernsteinSampler::exact(const Rational& x) const {
  require_unit_interval(x);
  const ScaledPmfRow row = pmf_row_scaled(n_, x);
  mpq_class acc;
  for (std::size_t k = 0; k <= n_; ++k) {
    if (samples_[k].is_zero() || row.numerators[k] == 0) continue;
    acc += samples_[k].raw() * row.numerators[k];
  }
  acc /= row.denominator;
  return Rational(acc);
}

double BernsteinSampler::approx(const Rational& x) const {
  require_unit_interval(x);
  const std::vector<double> w = pmf_row_float(n_, x.to_double());
  double acc = 0.0;
  for (std::size_t k = 0; k <= n_; ++k) acc += samples_f_[k] * w[k];
  return acc;
}

Rational bernstein_polynomial(const Polynomial& p, const BigInt& n, const Rational& x) {
  if (n < 1) throw DomainError("Bernstein degree must be at least 1");
  const int d = p.degree();
  if (d < 0) return Rational(0);
  // Stirling numbers of the second kind S(j, i), j, i <= d.
  std::vector<std::vector<BigInt>> stirling(d + 1, std::vector<BigInt>(d + 1, BigInt(0)));
  stirling[0][0] = 1;
  for (int j = 1; j <= d; ++j) {
    for (int i = 1; i <= j; ++i) stirling[j][i] = stirling[j - 1][i - 1] + BigInt(i) * stirling[j - 1][i];
  }
  // falling[i] * x^i for i <= d.
  std::vector<Rational> term(d + 1);
  BigInt falling(1);
  Rational xpow(1);
  for (int i = 0; i <= d; ++i) {
    term[i] = Rational(falling) * xpow;
    falling *= n - i;
    xpow *= x;
  }
  Rational total;
  Rational npow(1);
  for (int j = 0; j <= d; ++j) {
    if (!p.coefficient(j).is_zero()) {
      Rational inner;
      for (int i = 0; i <= j; ++i) {
        if (stirling[j][i] != 0) inner += Rational(stirling[j][i]) * term[i];
      }
      total += p.coefficient(j) * inner / npow;
    }
    npow *= Rational(n);
  }
  return total;
}

Rational bernstein_eval(const GalleryFn& f, std::size_t n, const Rational& x) {
  require_unit_interval(x);
  if (n < 1) throw DomainError("Bernstein degree must be at least 1");
  if (const auto p = polynomial_of(f)) return bernstein_polynomial(*p, BigInt(static_cast<unsigned long>(n)), x);
  if (n > kExactDegreeLimit) {
    throw CapacityError("exact Bernstein evaluation for n = " + std::to_string(n) + " exceeds the limit of " +
                        std::to_string(kExactDegreeLimit) + "; use float mode");
  }
  return BernsteinSampler(f, n).exact(x);
}

double bernstein_eval_float(const GalleryFn& f, std::size_t n, const Rational& x) {
  return BernsteinSampler(f, n).approx(x);
}

Rational bernstein_value(const GalleryFn& f, std::size_t n, const Rational& x, Mode mode) {
  return mode == Mode::Exact ? bernstein_eval(f, n, x) : Rational::from_double(bernstein_eval_float(f, n, x));
}

Target target_value(const GalleryFn& f, const Rational& x) {
  require_unit_interval(x);
  if (f.dirichlet()) throw NotRegulatedError("Dirichlet indicator has no one-sided limits");
  const Rational value = eval(f, x);
  if (x.is_zero() || x == Rational(1)) return {value, TargetKind::FunctionValue};
  const Rational l = left_limit(f, x).value;
  const Rational r = right_limit(f, x).value;
  if (l == r && r == value) return {value, TargetKind::FunctionValue};
  return {(l + r) / Rational(2), TargetKind::JumpMidpoint};
}

std::vector<std::size_t> default_schedule(Mode mode) {
  std::vector<std::size_t> s;
  const int top = mode == Mode::Exact ? 12 : 20;
  for (int e = 4; e <= top; ++e) s.push_back(std::size_t{1} << e);
  return s;
}

void validate_schedule(const std::vector<std::size_t>& schedule) {
  if (schedule.empty()) throw DomainError("schedule must not be empty");
  if (schedule.front() < 1) throw DomainError("schedule entries must be at least 1");
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (schedule[i] <= schedule[i - 1]) throw DomainError("schedule must be strictly increasing");
  }
}

Verdict judge(const std::vector<std::size_t>& schedule, const std::vector<Rational>& errors, const Rational& tol) {
  Verdict v;
  const std::size_t m = errors.size();
  if (m < 3 || schedule.size() != m) return v;
  const bool last_three_within = errors[m - 1] < tol && errors[m - 2] < tol && errors[m - 3] < tol;
  if (last_three_within) {
    std::size_t first = m - 3;
    while (first > 0 && errors[first - 1] < tol) --first;
    v.kind = Verdict::Kind::Converged;
    v.at_n = schedule[first];
    return v;
  }
  const bool last_three_outside = !(errors[m - 1] < tol) && !(errors[m - 2] < tol) && !(errors[m - 3] < tol);
  if (last_three_outside && !(errors[m - 1] < errors[m - 3])) v.kind = Verdict::Kind::NotConverged;
  return v;
}

ConvergenceReport converge_report(const GalleryFn& f, const Rational& x0, const std::vector<std::size_t>& schedule,
                                  const Rational& tol, Mode mode, std::optional<Target> target) {
  validate_schedule(schedule);
  if (tol.sign() <= 0) throw DomainError("tolerance must be positive");
  ConvergenceReport r;
  r.x0 = x0;
  r.mode = mode;
  r.schedule = schedule;
  r.tol = tol;
  r.target = target ? *target : target_value(f, x0);
  for (std::size_t n : schedule) {
    r.values.push_back(bernstein_value(f, n, x0, mode));
    r.errors.push_back(abs(r.values.back() - r.target.value));
  }
  r.verdict = judge(r.schedule, r.errors, tol);
  return r;
}

std::uint64_t sufficient_n(std::uint64_t M0, std::uint64_t N0, std::uint64_t k0) {
  constexpr std::uint64_t kMaxExponent = 62;
  if (M0 > kMaxExponent || N0 > kMaxExponent || k0 > kMaxExponent || 2 * M0 + 2 * N0 + k0 + 1 > kMaxExponent) {
    throw CapacityError("2^(2M0+2N0+k0+1) does not fit the 64-bit index range");
  }
  return std::uint64_t{1} << (2 * M0 + 2 * N0 + k0 + 1);
}

std::vector<Rational> uniform_grid(std::size_t count) {
  if (count < 2) throw DomainError("uniform grid needs at least two points");
  std::vector<Rational> g;
  g.reserve(count);
  for (std::size_t i = 0; i < count; ++i) g.emplace_back(i, count - 1);
  return g;
}

Rational uniform_error(const GalleryFn& f, std::uint64_t n, const std::vector<Rational>& grid) {
  if (grid.empty()) throw DomainError("grid must not be empty");
  Rational worst;
  if (const auto p = polynomial_of(f)) {
    const BigInt nn(static_cast<unsigned long>(n));
    for (const auto& x : grid) {
      require_unit_interval(x);
      worst = max(worst, abs((*p)(x) - bernstein_polynomial(*p, nn, x)));
    }
    return worst;
  }
  if (n > kExactDegreeLimit) {
    throw CapacityError("exact uniform error for n = " + std::to_string(n) + " exceeds the exact degree limit");
  }
  const BernsteinSampler sampler(f, static_cast<std::size_t>(n));
  for (const auto& x : grid) worst = max(worst, abs(eval(f, x) - sampler.exact(x)));
  return worst;
}

WindowSets window_sets(std::size_t n, const Rational& x0, unsigned N0) {
  if (n < 1) throw DomainError("n must be at least 1");
  const Rational delta = Rational::pow2(-static_cast<long>(N0));
  WindowSets s;
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational node(k, n);
    if (abs(x0 - node) >= delta) {
      s.a2.push_back(k);
    } else if (x0 <= node) {
      s.a0.push_back(k);
    } else {
      s.a1.push_back(k);
    }
  }
  return s;
}

ErrorDecomposition error_decomposition(const GalleryFn& f, const Rational& x0, unsigned N0, std::size_t n,
                                       std::optional<Target> target) {
  if (!(x0.sign() > 0 && x0 < Rational(1))) throw DomainError("x0 must lie in (0,1)");
  ErrorDecomposition d;
  d.n = n;
  d.x0 = x0;
  d.N0 = N0;
  d.target = target ? *target : target_value(f, x0);
  WindowSets s = window_sets(n, x0, N0);
  const PmfRow row = pmf_row(n, x0);
  auto partial = [&](const std::vector<std::size_t>& idx) {
    Rational acc;
    for (std::size_t k : idx) acc += (eval(f, Rational(k, n)) - d.target.value) * row.weights[k];
    return acc;
  };
  d.sum_a0 = partial(s.a0);
  d.sum_a1 = partial(s.a1);
  d.sum_a2 = partial(s.a2);
  d.a0 = std::move(s.a0);
  d.a1 = std::move(s.a1);
  d.a2 = std::move(s.a2);
  return d;
}

Rational halfmass(std::size_t n, const Rational& x0, unsigned N0) {
  require_window(x0, N0);
  const WindowSets s = window_sets(n, x0, N0);
  const ScaledPmfRow row = pmf_row_scaled(n, x0);
  BigInt acc(0);
  for (std::size_t k : s.a0) acc += row.numerators[k];
  return Rational(acc, row.denominator);
}

double halfmass_float(std::size_t n, const Rational& x0, unsigned N0) {
  require_window(x0, N0);
  const WindowSets s = window_sets(n, x0, N0);
  const std::vector<double> w = pmf_row_float(n, x0.to_double());
  double acc = 0.0;
  for (std::size_t k : s.a0) acc += w[k];
  return acc;
}

TailMass tail_mass(std::size_t n, const Rational& x0, unsigned N0) {
  require_window(x0, N0);
  const WindowSets s = window_sets(n, x0, N0);
  const ScaledPmfRow row = pmf_row_scaled(n, x0);
  BigInt acc(0);
  for (std::size_t k : s.a2) acc += row.numerators[k];
  TailMass t{Rational(acc, row.denominator),
             Rational::pow2(2 * static_cast<long>(N0)) * x0 * (Rational(1) - x0) / Rational(n)};
  if (t.bound < t.mass) {
    throw ConsistencyError("tail mass " + t.mass.str() + " exceeds its certified bound " + t.bound.str());
  }
  return t;
}

bool midpoint_bound_check(const GalleryFn& f, const Rational& x0, const std::vector<std::size_t>& schedule,
                          const Rational& tol, Mode mode) {
  validate_schedule(schedule);
  if (!(x0.sign() > 0 && x0 < Rational(1))) throw DomainError("x0 must lie in (0,1)");
  if (schedule.size() < 3) throw InconclusiveError("midpoint check needs at least three schedule entries");
  std::vector<Rational> values;
  for (std::size_t n : schedule) values.push_back(bernstein_value(f, n, x0, mode));
  const std::size_t m = values.size();
  const Rational hi = max(values[m - 1], max(values[m - 2], values[m - 3]));
  const Rational lo = min(values[m - 1], min(values[m - 2], values[m - 3]));
  if (!(hi - lo < tol)) throw InconclusiveError("Bernstein trajectory has not stabilized within tol");
  const Rational jump = abs(right_limit(f, x0).value - left_limit(f, x0).value) / Rational(2);
  return abs(eval(f, x0) - values.back()) <= jump + tol;
}

}  // namespace bernstein
