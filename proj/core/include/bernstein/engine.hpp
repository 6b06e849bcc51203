#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bernstein/gallery.hpp"

namespace bernstein {

enum class Mode { Exact, Float };

/// f(k/n) for k = 0..n, evaluated once and reused across many x.
class BernsteinSampler {
 public:
  BernsteinSampler(const GalleryFn& f, std::size_t n);

  std::size_t degree() const { return n_; }
  const std::vector<Rational>& samples() const { return samples_; }

  /// sum_k f(k/n) p_{n,k}(x), exact. Throws CapacityError past the exact degree limit.
  Rational exact(const Rational& x) const;
  /// Same sum with float PMF weights.
  double approx(const Rational& x) const;

 private:
  std::size_t n_;
  std::vector<Rational> samples_;
  std::vector<double> samples_f_;
};

/// B_n(f, x) exactly. Polynomials use the closed form
/// B_n(t^j)(x) = sum_i S(j,i) n(n-1)...(n-i+1) x^i / n^j, valid for any n; everything
/// else is summed over the PMF row and is subject to the exact degree limit.
Rational bernstein_eval(const GalleryFn& f, std::size_t n, const Rational& x);
double bernstein_eval_float(const GalleryFn& f, std::size_t n, const Rational& x);
/// Value in the requested mode, floats converted exactly to rationals.
Rational bernstein_value(const GalleryFn& f, std::size_t n, const Rational& x, Mode mode);

/// Closed-form Bernstein image of a polynomial for arbitrary degree n >= 1.
Rational bernstein_polynomial(const Polynomial& p, const BigInt& n, const Rational& x);

enum class TargetKind { FunctionValue, JumpMidpoint };
struct Target {
  Rational value;
  TargetKind kind = TargetKind::FunctionValue;
};

/// (f(x+) + f(x-))/2 tagged JumpMidpoint unless f(x+) = f(x) = f(x-), in which
/// case the common value tagged FunctionValue. Endpoints always use f(x).
Target target_value(const GalleryFn& f, const Rational& x);

struct Verdict {
  enum class Kind { Converged, NotConverged, Inconclusive };
  Kind kind = Kind::Inconclusive;
  /// First schedule entry from which every error is below tol (Converged only).
  std::optional<std::size_t> at_n;
};

struct ConvergenceReport {
  Rational x0;
  Mode mode = Mode::Exact;
  std::vector<std::size_t> schedule;
  std::vector<Rational> values;
  Target target;
  std::vector<Rational> errors;
  Rational tol;
  Verdict verdict;
};

/// Doubling schedule 2^4..2^12 (exact) or 2^4..2^20 (float).
std::vector<std::size_t> default_schedule(Mode mode);

/// Three-consecutive rule: Converged when the last three errors are below tol;
/// NotConverged when the last three are at or above tol with no decrease over
/// them; Inconclusive otherwise (including schedules shorter than three).
Verdict judge(const std::vector<std::size_t>& schedule, const std::vector<Rational>& errors, const Rational& tol);

/// Throws DomainError unless the schedule is nonempty, strictly increasing and positive.
void validate_schedule(const std::vector<std::size_t>& schedule);

ConvergenceReport converge_report(const GalleryFn& f, const Rational& x0, const std::vector<std::size_t>& schedule,
                                  const Rational& tol, Mode mode = Mode::Exact,
                                  std::optional<Target> target = std::nullopt);

/// 2^{2 M0 + 2 N0 + k0 + 1}. Throws CapacityError when the exponent reaches 63.
std::uint64_t sufficient_n(std::uint64_t M0, std::uint64_t N0, std::uint64_t k0);

/// count equally spaced points 0, 1/(count-1), ..., 1.
std::vector<Rational> uniform_grid(std::size_t count);

/// max over the grid of |f(x) - B_n(f, x)|, exact.
Rational uniform_error(const GalleryFn& f, std::uint64_t n, const std::vector<Rational>& grid);

/// Partial sums of (f(k/n) - target) p_{n,k}(x0) over
///   A0 = {k : x0 <= k/n < x0 + 2^-N0},
///   A1 = {k : x0 - 2^-N0 < k/n < x0},
///   A2 = {k : |x0 - k/n| >= 2^-N0}.
struct ErrorDecomposition {
  std::size_t n = 0;
  Rational x0;
  unsigned N0 = 0;
  Target target;
  std::vector<std::size_t> a0, a1, a2;
  Rational sum_a0, sum_a1, sum_a2;
  Rational total() const { return sum_a0 + sum_a1 + sum_a2; }
};
/// The target defaults to target_value(f, x0); functions without one-sided
/// limits need an explicit one.
ErrorDecomposition error_decomposition(const GalleryFn& f, const Rational& x0, unsigned N0, std::size_t n,
                                       std::optional<Target> target = std::nullopt);

/// Index sets A0, A1, A2 as above.
struct WindowSets {
  std::vector<std::size_t> a0, a1, a2;
};
WindowSets window_sets(std::size_t n, const Rational& x0, unsigned N0);

/// sum over A0 of p_{n,k}(x0). Requires 0 < x0 < 1 and 2^-N0 <= min(x0, 1 - x0).
Rational halfmass(std::size_t n, const Rational& x0, unsigned N0);
double halfmass_float(std::size_t n, const Rational& x0, unsigned N0);

/// sum over A2 of p_{n,k}(x0) together with its certified bound 2^{2 N0} x0 (1 - x0) / n.
struct TailMass {
  Rational mass;
  Rational bound;
};
/// Throws ConsistencyError if the mass ever exceeds the bound.
TailMass tail_mass(std::size_t n, const Rational& x0, unsigned N0);

/// |f(x0) - L| <= |(f(x0+) - f(x0-))/2| + tol with L the last trajectory value.
/// Throws InconclusiveError when the last three values spread by tol or more.
bool midpoint_bound_check(const GalleryFn& f, const Rational& x0, const std::vector<std::size_t>& schedule,
                          const Rational& tol, Mode mode = Mode::Exact);

}  // namespace bernstein
