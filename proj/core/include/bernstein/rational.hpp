#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

namespace bernstein {

using BigInt = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T v) : q_(static_cast<long>(v)) {}  // NOLINT(implicit)

  template <std::unsigned_integral T>
  Rational(T v) : q_(static_cast<unsigned long>(v)) {}  // NOLINT(implicit)

  template <std::integral A, std::integral B>
  Rational(A num, B den) : Rational(to_big(num), to_big(den)) {}

  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const BigInt& num) : q_(num) {}
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p/q" or "p" (optional leading sign). Decimals are rejected.
  static Rational parse(std::string_view text);
  /// The exact binary value of a finite double.
  static Rational from_double(double v);
  /// 2^e for any integer e.
  static Rational pow2(long e);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  /// Canonical "p/q" form; the denominator is always written, e.g. "0/1".
  std::string str() const;
  double to_double() const { return q_.get_d(); }
  BigInt floor() const;
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  Rational inverse() const;

  const mpq_class& raw() const { return q_; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  template <std::integral T>
  static BigInt to_big(T v) {
    if constexpr (std::is_signed_v<T>) {
      return BigInt(static_cast<long>(v));
    } else {
      return BigInt(static_cast<unsigned long>(v));
    }
  }

  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.abs(); }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// The rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Parses a non-negative integer written in decimal or as "2^k".
std::uint64_t parse_count(std::string_view text);

}  // namespace bernstein
