#pragma once

#include <ostream>
#include <stdexcept>

#include "curvetop/rational.hpp"

namespace curvetop {

// Closed interval with exact rational endpoints. All arithmetic is exact
// (no rounding), so enclosure is preserved under every operation below.
// A degenerate interval (lo == hi) encodes an exact value.
struct RatInterval {
  Rational lo, hi;

  RatInterval() : lo(0), hi(0) {}
  explicit RatInterval(const Rational& v) : lo(v), hi(v) {}
  RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw std::invalid_argument("RatInterval: lo > hi");
  }

  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }

  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool intersects(const RatInterval& o) const { return lo <= o.hi && o.lo <= hi; }

  // -1, 0, +1 when the sign is the same for every point; 2 when mixed.
  int sign() const {
    if (hi.sign() < 0) return -1;
    if (lo.sign() > 0) return 1;
    if (lo.is_zero() && hi.is_zero()) return 0;
    return 2;
  }

  // max(|lo|, |hi|) and min |v| over the interval.
  Rational mag() const { return max(abs(lo), abs(hi)); }
  Rational mig() const {
    if (contains_zero()) return Rational(0);
    return min(abs(lo), abs(hi));
  }

  friend RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }
  friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
  }
  friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4))};
  }
  // Division requires 0 outside the divisor.
  friend RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.contains_zero()) throw std::domain_error("RatInterval division by interval containing 0");
    RatInterval inv(Rational(1) / b.hi, Rational(1) / b.lo);
    return a * inv;
  }

  friend bool operator==(const RatInterval& a, const RatInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }

  friend std::ostream& operator<<(std::ostream& os, const RatInterval& iv) {
    return os << "[" << iv.lo << ", " << iv.hi << "]";
  }
};

// Tight power: even exponents of sign-mixed intervals clamp at 0.
inline RatInterval pow(const RatInterval& a, unsigned e) {
  if (e == 0) return RatInterval(Rational(1));
  if (e == 1) return a;
  Rational plo = pow(a.lo, e), phi = pow(a.hi, e);
  if (e % 2 == 1) return {plo, phi};
  if (a.lo.sign() >= 0) return {plo, phi};
  if (a.hi.sign() <= 0) return {phi, plo};
  return {Rational(0), max(plo, phi)};
}

// Intersection; caller must ensure the intervals meet.
inline RatInterval intersect(const RatInterval& a, const RatInterval& b) {
  return {max(a.lo, b.lo), min(a.hi, b.hi)};
}

inline RatInterval hull(const RatInterval& a, const RatInterval& b) {
  return {min(a.lo, b.lo), max(a.hi, b.hi)};
}

}  // namespace curvetop
