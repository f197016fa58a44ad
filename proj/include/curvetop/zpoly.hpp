#pragma once

#include <cassert>
#include <vector>

#include "curvetop/poly.hpp"

namespace curvetop {

// Exact univariate machinery on integer-coefficient polynomials. Rational
// inputs are scaled to a primitive integer form first: every routine here
// only ever needs roots and signs, which positive scaling preserves, and
// integer PRS arithmetic keeps coefficient growth polynomial where naive
// rational remainders explode.

inline Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;  // 0 for the zero polynomial, positive otherwise
}

inline ZPoly primitive_part(const ZPoly& p) {
  Integer g = content(p);
  if (g == 0 || g == 1) return p;
  std::vector<Integer> c(p.coeffs());
  for (auto& x : c) x = ring_exact_div(x, g);
  return ZPoly(std::move(c));
}

// Clears denominators; the result is a positive multiple of p.
inline ZPoly to_integer_poly(const UniPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<Integer> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.push_back(q.num() * (l / q.den()));
  return ZPoly(std::move(c));
}

inline UniPoly to_rational_poly(const ZPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& z : p.coeffs()) c.emplace_back(z);
  return UniPoly(std::move(c));
}

// Sign of p(u/v) with v > 0, computed as sign of sum c_i u^i v^(n-i).
inline int sign_at(const ZPoly& p, const Integer& u, const Integer& v) {
  assert(v > 0);
  if (p.is_zero()) return 0;
  const auto& c = p.coeffs();
  Integer acc = c.back(), vp = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    vp *= v;
    acc = acc * u + c[i] * vp;
  }
  return sgn(acc);
}

inline int sign_at(const ZPoly& p, const Rational& a) { return sign_at(p, a.num(), a.den()); }

// Pseudo-remainder scaled so the result is a *positive* rational multiple of
// rem(a, b); safe inside sign-sensitive chains.
inline ZPoly sprem(const ZPoly& a, const ZPoly& b) {
  ZPoly r = pseudo_rem(a, b);
  int steps = a.degree() - b.degree() + 1;
  if (sgn(b.lc()) < 0 && (steps & 1)) return -r;
  return r;
}

// Primitive-PRS gcd; returns the primitive gcd with positive leading
// coefficient (1 for coprime inputs).
inline ZPoly gcd_z(ZPoly a, ZPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.is_zero()) return sgn(b.lc()) < 0 ? -b : b;
  if (b.is_zero()) return sgn(a.lc()) < 0 ? -a : a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    ZPoly r = primitive_part(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return sgn(a.lc()) < 0 ? -a : a;
}

inline ZPoly square_free_part_z(const ZPoly& p) {
  if (p.is_zero() || p.degree() <= 1) return primitive_part(p);
  ZPoly g = gcd_z(p, p.derivative());
  if (g.degree() == 0) return primitive_part(p);
  return primitive_part(ring_exact_div(primitive_part(p), g));
}

// Sturm chain with scaled-integer elements: each element is a positive
// multiple of the textbook remainder, so sign variations are unchanged.
inline std::vector<ZPoly> sturm_chain_z(const ZPoly& p) {
  std::vector<ZPoly> chain;
  ZPoly a = primitive_part(p);
  if (a.is_zero()) return chain;
  chain.push_back(a);
  ZPoly d = primitive_part(a.derivative());
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const ZPoly& s1 = chain[chain.size() - 2];
    const ZPoly& s2 = chain.back();
    ZPoly r = sprem(s1, s2);
    if (r.is_zero()) break;
    chain.push_back(-primitive_part(r));
  }
  return chain;
}

inline int sign_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

inline int sturm_variations_at(const std::vector<ZPoly>& chain, const Rational& a) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sign_at(q, a));
  return sign_variations(signs);
}

// Distinct real roots of the chain's polynomial in (a, b]; requires that
// neither endpoint is a root of chain[0].
inline int sturm_count(const std::vector<ZPoly>& chain, const Rational& a, const Rational& b) {
  assert(a <= b);
  if (a == b) return 0;
  return sturm_variations_at(chain, a) - sturm_variations_at(chain, b);
}

// Integer B with every real root of p strictly inside (-B, B).
inline Integer cauchy_bound(const ZPoly& p) {
  assert(!p.is_zero());
  if (p.degree() == 0) return 1;
  Integer m = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    Integer a = abs(c[i]);
    if (a > m) m = a;
  }
  Integer lead = abs(c.back());
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), m.get_mpz_t(), lead.get_mpz_t());
  return q + 2;
}

inline bool is_dyadic(const Rational& r) {
  Integer d = r.den();
  return mpz_popcount(d.get_mpz_t()) == 1;  // powers of two have one set bit
}

}  // namespace curvetop
