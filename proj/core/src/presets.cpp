#include <numeric>

#include "bernstein/errors.hpp"
#include "bernstein/gallery.hpp"

namespace bernstein {
namespace {

constexpr std::size_t kThomaeSupportSize = 64;
constexpr std::size_t kPhpLevels = 12;
constexpr unsigned kDirichletOrder = 16;

std::vector<Rational> enumerate_filtered(std::size_t count, bool odd_only) {
  std::vector<Rational> out;
  for (unsigned long q = 2; out.size() < count; ++q) {
    if (odd_only && q % 2 == 0) continue;
    for (unsigned long p = 1; p < q && out.size() < count; ++p) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

GalleryFn thomae_default() {
  std::vector<Rational> pts = enumerate_rationals(kThomaeSupportSize);
  std::vector<std::uint32_t> heights(pts.size());
  std::iota(heights.begin(), heights.end(), 0u);
  return make_thomae(HeightedSet(std::move(pts), std::move(heights)));
}

GalleryFn php_h() {
  const std::vector<Rational> fresh = enumerate_odd_rationals(kPhpLevels);
  std::vector<std::vector<Rational>> sets;
  for (std::size_t n = 0; n < kPhpLevels; ++n) {
    sets.emplace_back(fresh.begin(), fresh.begin() + static_cast<std::ptrdiff_t>(n + 1));
  }
  return make_php_h(sets);
}

GalleryFn dirichlet() {
  std::vector<Rational> farey{Rational(0), Rational(1)};
  for (unsigned q = 2; q <= kDirichletOrder; ++q) {
    for (unsigned p = 1; p < q; ++p) {
      if (std::gcd(p, q) == 1) farey.emplace_back(p, q);
    }
  }
  return make_dirichlet(std::move(farey));
}

}  // namespace

std::vector<Rational> enumerate_rationals(std::size_t count) { return enumerate_filtered(count, false); }

std::vector<Rational> enumerate_odd_rationals(std::size_t count) { return enumerate_filtered(count, true); }

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"heaviside", "square", "thomae-default", "php-h", "dirichlet"};
  return names;
}

GalleryFn preset(std::string_view name) {
  if (name == "heaviside") return make_heaviside(Rational(1, 2), Rational(1));
  if (name == "square") return make_polynomial(Polynomial::monomial(2));
  if (name == "thomae-default") return thomae_default();
  if (name == "php-h") return php_h();
  if (name == "dirichlet") return dirichlet();
  throw DomainError("unknown preset '" + std::string(name) + "'");
}

}  // namespace bernstein
