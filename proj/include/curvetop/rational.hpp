#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace curvetop {

using Integer = mpz_class;

// Exact rational number, always in canonical form: positive denominator,
// gcd(|num|, den) == 1. Thin value wrapper over GMP's mpq_t; the wrapper
// keeps expression templates out of client code and pins down canonicity.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}            // NOLINT: implicit by design
  Rational(long n) : v_(static_cast<long>(n)) {}
  Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& num, const Integer& den) : v_(num, den) { v_.canonicalize(); }
  Rational(int num, int den) : v_(num, den) { v_.canonicalize(); }

  // Parses "n" or "n/d" (arbitrary precision, base 10).
  static Rational from_string(const std::string& s) {
    Rational r;
    if (r.v_.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.v_.canonicalize();
    return r;
  }

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { Rational r; r.v_ = -v_; return r; }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) { Rational r; r.v_ = ::abs(a.v_); return r; }

  // a^e for e >= 0.
  friend Rational pow(const Rational& a, unsigned e) {
    Rational r(1), base = a;
    while (e) {
      if (e & 1u) r *= base;
      base *= base;
      e >>= 1u;
    }
    return r;
  }

  double to_double() const { return v_.get_d(); }

  std::string to_string() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

// Largest integer <= r.
inline Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

// Smallest integer >= r.
inline Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// 10^-digits as an exact rational, for width targets.
inline Rational rational_pow10_neg(unsigned digits) {
  Integer d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10, digits);
  return Rational(Integer(1), d);
}

// Nearest integer to num/den, ties away from zero. Exact.
inline Integer round_quotient(const Integer& num, const Integer& den) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  // r in [0, den); round up when 2r >= den.
  if (Integer(2 * r) >= den) q += 1;
  return q;
}

// Fixed-point decimal rendering with `digits` places, round half away from
// zero. Used by the emitters: formatting from the exact value keeps output
// byte-deterministic without a float detour.
inline std::string to_fixed_decimal(const Rational& r, unsigned digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  bool neg = r.sign() < 0;
  Rational a = neg ? -r : r;
  Integer scaled = round_quotient(a.num() * scale, a.den());
  Integer whole = scaled / scale, frac = scaled % scale;
  std::string out = whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  if (neg && scaled != 0) out.insert(out.begin(), '-');
  return out;
}

}  // namespace curvetop
