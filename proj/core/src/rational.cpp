#include "bernstein/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "bernstein/errors.hpp"

namespace bernstein {
namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const std::string_view den = text.substr(slash + 1);
  if (!den.empty() && (den.front() == '-' || den.front() == '+')) {
    throw ParseError("signed denominator in '" + std::string(text) + "'");
  }
  const BigInt d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), d);
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite double has no rational value");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), v);
  return Rational(q);
}

Rational Rational::pow2(long e) {
  mpz_class p(1);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
  return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

BigInt Rational::floor() const {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) return simplest_between(hi, lo);
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_between(-hi, -lo);
  const BigInt fl = lo.floor();
  if (Rational(fl) == lo) return lo;
  if (fl < hi.floor()) return Rational(BigInt(fl + 1));
  const Rational whole(fl);
  return whole + simplest_between((hi - whole).inverse(), (lo - whole).inverse()).inverse();
}

std::uint64_t parse_count(std::string_view text) {
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) {
    const BigInt v = parse_integer(text);
    if (v < 0 || !v.fits_ulong_p()) throw ParseError("count out of range: '" + std::string(text) + "'");
    return v.get_ui();
  }
  const BigInt base = parse_integer(text.substr(0, caret));
  const BigInt exponent = parse_integer(text.substr(caret + 1));
  if (base != 2 || exponent < 0 || exponent > 63) {
    throw ParseError("expected 2^k with 0 <= k <= 63: '" + std::string(text) + "'");
  }
  return std::uint64_t{1} << exponent.get_ui();
}

}  // namespace bernstein
