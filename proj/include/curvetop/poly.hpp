#pragma once

#include <algorithm>
#include <cassert>
#include <sstream>
#include <string>
#include <vector>

#include "curvetop/interval.hpp"
#include "curvetop/rational.hpp"

namespace curvetop {

// Coefficient-ring hooks. DensePoly works over any commutative ring that
// provides these; Rational, Integer and DensePoly itself qualify.
inline bool ring_is_zero(const Rational& a) { return a.is_zero(); }
inline bool ring_is_zero(const Integer& a) { return sgn(a) == 0; }
inline Rational ring_exact_div(const Rational& a, const Rational& b) { return a / b; }
inline Integer ring_exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Rational ring_mul_ui(const Rational& a, unsigned long k) {
  return a * Rational(Integer(k));
}
inline Integer ring_mul_ui(const Integer& a, unsigned long k) { return a * Integer(k); }

// Dense univariate polynomial over a coefficient ring C, index = degree.
// Invariant: the coefficient list carries no trailing zeros, so the zero
// polynomial is the empty list and degree() is -1 for it.
template <class C>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(C constant) {
    if (!ring_is_zero(constant)) c_.push_back(std::move(constant));
  }
  explicit DensePoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static DensePoly monomial(C coeff, unsigned deg) {
    DensePoly p;
    if (!ring_is_zero(coeff)) {
      p.c_.resize(deg + 1);
      p.c_[deg] = std::move(coeff);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<C>& coeffs() const { return c_; }

  // Coefficient of t^i (zero beyond the stored range).
  const C& operator[](std::size_t i) const {
    static const C kZero{};
    return i < c_.size() ? c_[i] : kZero;
  }

  const C& lc() const {
    assert(!c_.empty());
    return c_.back();
  }

  void set_coeff(std::size_t i, C v) {
    if (i >= c_.size()) {
      if (ring_is_zero(v)) return;
      c_.resize(i + 1);
    }
    c_[i] = std::move(v);
    trim();
  }

  friend DensePoly operator-(const DensePoly& a) {
    DensePoly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    DensePoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a[i] + b[i];
    r.trim();
    return r;
  }

  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) {
    DensePoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a[i] - b[i];
    r.trim();
    return r;
  }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    DensePoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, C{});
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (ring_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }

  friend DensePoly operator*(const DensePoly& a, const C& s) {
    if (ring_is_zero(s)) return {};
    DensePoly r = a;
    for (auto& x : r.c_) x = x * s;
    r.trim();
    return r;
  }

  friend bool operator==(const DensePoly& a, const DensePoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!ring_is_zero(a.c_[i] - b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

  // Multiply by t^k.
  DensePoly shifted_up(unsigned k) const {
    if (is_zero()) return {};
    DensePoly r;
    r.c_.assign(c_.size() + k, C{});
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
  }

  DensePoly derivative() const {
    DensePoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = ring_mul_ui(c_[i], i);
    r.trim();
    return r;
  }

  // Horner evaluation into any type X constructible from C with X-arithmetic.
  template <class X>
  X eval(const X& x) const {
    if (c_.empty()) return X{};
    X acc(c_.back());
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + X(c_[i]);
    return acc;
  }

  void trim() {
    while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
  }

 private:
  std::vector<C> c_;
};

template <class C>
bool ring_is_zero(const DensePoly<C>& p) {
  return p.is_zero();
}

template <class C>
DensePoly<C> ring_mul_ui(const DensePoly<C>& p, unsigned long k) {
  std::vector<C> c(p.coeffs());
  for (auto& x : c) x = ring_mul_ui(x, k);
  return DensePoly<C>(std::move(c));
}

// Exact quotient a / b; asserts divisibility (used by the subresultant PRS,
// where exactness is a theorem).
template <class C>
DensePoly<C> ring_exact_div(const DensePoly<C>& a, const DensePoly<C>& b) {
  assert(!b.is_zero());
  DensePoly<C> rem = a, quot;
  int db = b.degree();
  while (!rem.is_zero() && rem.degree() >= db) {
    C q = ring_exact_div(rem.lc(), b.lc());
    unsigned k = static_cast<unsigned>(rem.degree() - db);
    DensePoly<C> t = DensePoly<C>::monomial(q, k);
    quot = quot + t;
    rem = rem - t * b;
  }
  assert(rem.is_zero() && "ring_exact_div: not divisible");
  return quot;
}

using UniPoly = DensePoly<Rational>;
using ZPoly = DensePoly<Integer>;
using IntervalPoly = DensePoly<RatInterval>;

inline bool ring_is_zero(const RatInterval& a) { return a.is_exact() && a.lo.is_zero(); }
inline RatInterval ring_mul_ui(const RatInterval& a, unsigned long k) {
  Rational f{Integer(k)};
  return {a.lo * f, a.hi * f};
}

// Field division with remainder; only meaningful for Rational coefficients.
inline std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
  assert(!b.is_zero());
  UniPoly rem = a, quot;
  int db = b.degree();
  while (!rem.is_zero() && rem.degree() >= db) {
    Rational q = rem.lc() / b.lc();
    unsigned k = static_cast<unsigned>(rem.degree() - db);
    UniPoly t = UniPoly::monomial(q, k);
    quot = quot + t;
    rem = rem - t * b;
  }
  return {quot, rem};
}

// Pseudo-remainder: rem(lc(b)^(deg a - deg b + 1) * a, b), all in the ring.
template <class C>
DensePoly<C> pseudo_rem(const DensePoly<C>& a, const DensePoly<C>& b) {
  assert(!b.is_zero());
  int da = a.degree(), db = b.degree();
  if (da < db) return a;
  DensePoly<C> rem = a;
  const C& lb = b.lc();
  int steps = da - db + 1;
  for (int s = 0; s < steps; ++s) {
    if (rem.is_zero() || rem.degree() < db) {
      rem = rem * lb;  // keep the multiplier count exact
      continue;
    }
    C lr = rem.lc();
    unsigned k = static_cast<unsigned>(rem.degree() - db);
    rem = rem * lb - (b * lr).shifted_up(k);
  }
  assert(rem.is_zero() || rem.degree() < db);
  return rem;
}

inline std::string coeff_to_string(const Rational& c) { return c.to_string(); }
inline std::string coeff_to_string(const Integer& c) { return c.get_str(); }

// "3*x^2 - 1/2*x + 5" style rendering, highest degree first.
template <class C>
std::string to_string(const DensePoly<C>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const C& c = p[static_cast<std::size_t>(i)];
    if (ring_is_zero(c)) continue;
    std::string cs = coeff_to_string(c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) os << "-", cs = cs.substr(1);
    } else {
      os << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    }
    first = false;
    if (i == 0) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace curvetop
