#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bernstein/piecewise.hpp"
#include "bernstein/thomae.hpp"

namespace bernstein {

class GalleryFn;

/// lhs_coeff * lhs + rhs_coeff * rhs. Sums and differences are the (1, 1)
/// and (1, -1) instances.
struct LinearCombination {
  Rational lhs_coeff;
  std::shared_ptr<const GalleryFn> lhs;
  Rational rhs_coeff;
  std::shared_ptr<const GalleryFn> rhs;
};

/// Uniform, immutable handle over every function the workbench knows.
class GalleryFn {
 public:
  using Variant = std::variant<PiecewiseFn, ThomaeFn, DirichletFn, LinearCombination>;

  GalleryFn(PiecewiseFn f) : v_(std::move(f)) {}  // NOLINT(implicit)
  GalleryFn(ThomaeFn f) : v_(std::move(f)) {}     // NOLINT(implicit)
  GalleryFn(DirichletFn f) : v_(std::move(f)) {}  // NOLINT(implicit)
  GalleryFn(LinearCombination f) : v_(std::move(f)) {}  // NOLINT(implicit)

  const Variant& variant() const { return v_; }
  const PiecewiseFn* piecewise() const { return std::get_if<PiecewiseFn>(&v_); }
  const ThomaeFn* thomae() const { return std::get_if<ThomaeFn>(&v_); }
  const DirichletFn* dirichlet() const { return std::get_if<DirichletFn>(&v_); }
  const LinearCombination* combination() const { return std::get_if<LinearCombination>(&v_); }

  /// "piecewise", "thomae", "dirichlet" or "combination".
  std::string_view type_name() const;

 private:
  Variant v_;
};

/// Exact value at a rational argument in [0,1].
Rational eval(const GalleryFn& f, const Rational& x);

/// A one-sided limit. `construction_derived` marks values known from how the
/// function was built (Thomae-type functions) rather than from piece data.
struct OneSidedLimit {
  Rational value;
  bool construction_derived = false;
};
OneSidedLimit left_limit(const GalleryFn& f, const Rational& x0);
OneSidedLimit right_limit(const GalleryFn& f, const Rational& x0);

/// Piecewise functions and linear combinations of them collapsed into one
/// piecewise function; nullopt when a Thomae or Dirichlet part is involved.
std::optional<PiecewiseFn> as_piecewise(const GalleryFn& f);

/// Points where a regulated function may be discontinuous: breakpoints of
/// piecewise parts and support points of Thomae parts, sorted and deduplicated.
std::vector<Rational> singular_points(const GalleryFn& f);

struct BvVerdict {
  enum class Kind { Bounded, Unbounded, UnknownAtTruncation, NotApplicable };
  Kind kind = Kind::NotApplicable;
  /// Total variation (Bounded) or the variation of the materialized truncation.
  std::optional<Rational> variation;
  /// False when the variation is only a lower bound from approximated extrema.
  bool exact = true;
};

/// Function-class membership. An empty optional means "not applicable".
struct ClassReport {
  std::optional<bool> regulated;
  std::optional<bool> cadlag;
  std::optional<bool> u0;
  std::optional<bool> monotone;
  std::optional<bool> lsco;
  std::optional<bool> usco;
  std::optional<bool> cliquish;
  std::optional<bool> locally_bounded;
  /// A point around which the function is continuous, witnessing cliquishness.
  std::optional<Rational> cliquish_witness;
  BvVerdict bv;
};
ClassReport classify(const GalleryFn& f);

/// Total variation of a piecewise function on [0, y]: monotone-piece
/// increments plus |f(b)-f(b-)| + |f(b+)-f(b)| at each breakpoint.
struct ExactVariation {
  Rational value;
  bool exact = true;
};
ExactVariation piecewise_variation(const PiecewiseFn& f, const Rational& y);
/// Variation of the materialized (finite) support of a Thomae-type function on [0, y].
Rational thomae_truncated_variation(const ThomaeFn& f, const Rational& y);

// Constructors -------------------------------------------------------------

/// Step from 0 to 1 at a in (0,1) taking value v at a.
PiecewiseFn make_heaviside(const Rational& a, const Rational& v);

struct StepJump {
  Rational at;
  Rational size;
  /// Value at the jump point; defaults to the right limit.
  std::optional<Rational> value;
};
/// Step function starting at `initial` with the given jumps inside (0,1).
PiecewiseFn make_step(const Rational& initial, const std::vector<StepJump>& jumps);
/// Indicator of a finite point set.
PiecewiseFn make_indicator(const std::vector<Rational>& points);
PiecewiseFn make_polynomial(const Polynomial& p);
ThomaeFn make_thomae(HeightedSet support, WeightRule rule = WeightRule::geometric(),
                     LevelRule level_rule = LevelRule::Height);
/// h(x) = 1/2^{n+1} for the least n with x in X_n, 0 off the union. The sets
/// must be nested (X_0 within X_1 within ...).
ThomaeFn make_php_h(const std::vector<std::vector<Rational>>& closed_sets);
DirichletFn make_dirichlet(std::vector<Rational> designated);

GalleryFn linear_combination(const Rational& a, const GalleryFn& f, const Rational& b, const GalleryFn& g);
GalleryFn sum(const GalleryFn& f, const GalleryFn& g);
GalleryFn difference(const GalleryFn& f, const GalleryFn& g);

/// The rational restriction of a Thomae-type function as an explicit
/// piecewise function: zero pieces with the support values at breakpoints.
PiecewiseFn rational_restriction(const ThomaeFn& f);

// Presets ------------------------------------------------------------------

/// Reduced rationals in (0,1) ordered by denominator, then numerator:
/// 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, ...
std::vector<Rational> enumerate_rationals(std::size_t count);
/// As above, restricted to odd denominators: 1/3, 2/3, 1/5, 2/5, ...
std::vector<Rational> enumerate_odd_rationals(std::size_t count);

/// Names accepted by `preset`: heaviside, square, thomae-default, php-h, dirichlet.
const std::vector<std::string>& preset_names();
/// Throws DomainError for unknown names.
GalleryFn preset(std::string_view name);

}  // namespace bernstein
