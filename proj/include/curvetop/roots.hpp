#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "curvetop/errors.hpp"
#include "curvetop/zpoly.hpp"

namespace curvetop {

// One isolated real root: a closed rational interval containing exactly one
// root of the subject polynomial. Degenerate interval <=> the root is known
// exactly as a rational.
struct RealRoot {
  RatInterval iv;
  bool exact = false;

  const Rational& value() const {
    assert(exact);
    return iv.lo;
  }
};

struct RootList {
  std::vector<RealRoot> roots;

  std::size_t size() const { return roots.size(); }
  bool empty() const { return roots.empty(); }
  const RealRoot& operator[](std::size_t i) const { return roots[i]; }
  auto begin() const { return roots.begin(); }
  auto end() const { return roots.end(); }
};

// Textbook Sturm chain over the rationals: s0 = p, s1 = p', then negated
// remainders down to the last nonzero element. Exposed for direct use and
// testing; the isolation internals run on scaled integer chains instead.
inline std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  if (p.is_zero()) throw InputError("sturm_sequence: zero polynomial");
  std::vector<UniPoly> chain{p};
  UniPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    UniPoly r = divrem(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

// Simplest rational in [lo, hi]: minimal denominator, then minimal |numerator|.
// Stern-Brocot / continued-fraction descent.
inline Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
  assert(lo <= hi);
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_rational_in(-hi, -lo);
  // 0 < lo <= hi
  Rational l = lo, h = hi;
  // Iterative continued-fraction walk; assembles value on unwind.
  std::vector<Integer> quotients;
  while (true) {
    Integer c = ceil(l);
    if (Rational(c) <= h) {
      quotients.push_back(c);
      break;
    }
    Integer f = floor(l);
    quotients.push_back(f);
    Rational nl = Rational(1) / (h - Rational(f));
    Rational nh = Rational(1) / (l - Rational(f));
    l = nl;
    h = nh;
  }
  Rational r(quotients.back());
  for (std::size_t i = quotients.size() - 1; i-- > 0;) r = Rational(quotients[i]) + Rational(1) / r;
  return r;
}

namespace detail {

// Width below which a rational root of denominator <= 10^6 is guaranteed to
// be the unique minimal-denominator rational in its isolating interval.
inline const Rational& exactness_window() {
  static const Rational w(Integer(1), Integer("2000000000000"));
  return w;
}

constexpr unsigned long kRationalRootDenCutoff = 1000000;

// Try to pin the unique root of z in [a, b] (signs opposite at endpoints) to
// an exact rational; refines to the exactness window first.
inline std::optional<Rational> identify_rational_root(const ZPoly& z, Rational& a, Rational& b,
                                                      int& sa) {
  while (b - a > exactness_window()) {
    Rational m = (a + b) / Rational(2);
    int sm = sign_at(z, m);
    if (sm == 0) return m;
    if (sm == sa) {
      a = m;
    } else {
      b = m;
    }
  }
  Rational cand = simplest_rational_in(a, b);
  if (sign_at(z, cand) == 0) return cand;
  return std::nullopt;
}

}  // namespace detail

// Isolates the distinct real roots of p: Sturm-chain bisection from the
// Cauchy bound, with exact rational roots detected (continued-fraction
// identification, denominators up to 10^6 guaranteed; larger heights found
// opportunistically). Returned intervals are pairwise disjoint, strictly
// increasing, dyadic-endpoint unless degenerate.
inline RootList isolate_roots(const UniPoly& p) {
  if (p.is_zero()) throw InputError("isolate_roots: zero polynomial");
  ZPoly z = square_free_part_z(to_integer_poly(p));
  std::vector<Rational> exacts;
  std::vector<RatInterval> boxes;

  if (!z.is_zero() && z.degree() >= 1 && sgn(z[0]) == 0) {
    exacts.emplace_back(0);
    std::vector<Integer> c(z.coeffs().begin() + 1, z.coeffs().end());
    z = ZPoly(std::move(c));
  }

  // Bisection with deflation restarts: an exact midpoint hit removes the
  // root from z and re-isolates, so stack intervals always have nonroot
  // endpoints.
  bool restart = true;
  while (restart && z.degree() >= 1) {
    restart = false;
    auto chain = sturm_chain_z(z);
    Integer B = cauchy_bound(z);
    struct Seg {
      Rational a, b;
      int va, vb;
    };
    std::deque<Seg> work;
    Rational lo{-B}, hi{B};
    work.push_back({lo, hi, sturm_variations_at(chain, lo), sturm_variations_at(chain, hi)});
    std::vector<RatInterval> found;
    while (!work.empty()) {
      Seg s = work.front();
      work.pop_front();
      int n = s.va - s.vb;
      if (n <= 0) continue;
      if (n == 1) {
        found.emplace_back(s.a, s.b);
        continue;
      }
      Rational m = (s.a + s.b) / Rational(2);
      if (sign_at(z, m) == 0) {
        exacts.push_back(m);
        UniPoly q = divrem(to_rational_poly(z), UniPoly(std::vector<Rational>{-m, 1})).first;
        z = to_integer_poly(q);
        restart = true;
        break;
      }
      int vm = sturm_variations_at(chain, m);
      work.push_back({s.a, m, s.va, vm});
      work.push_back({m, s.b, vm, s.vb});
    }
    if (!restart) {
      for (auto& iv : found) {
        Rational a = iv.lo, b = iv.hi;
        int sa = sign_at(z, a);
        if (auto r = detail::identify_rational_root(z, a, b, sa)) {
          exacts.push_back(*r);
        } else {
          boxes.emplace_back(a, b);
        }
      }
    }
  }

  std::vector<RealRoot> all;
  all.reserve(exacts.size() + boxes.size());
  for (auto& r : exacts) all.push_back({RatInterval(r), true});
  for (auto& b : boxes) all.push_back({b, false});

  // Exact roots found by deflation can sit inside later intervals (or two
  // intervals can share an endpoint); refine until strictly separated. The
  // intervals' roots are roots of the final deflated z, whose signs at their
  // endpoints are nonzero, so z is the right bisection subject.
  auto bisect_once = [&](RealRoot& r) {
    Rational m = (r.iv.lo + r.iv.hi) / Rational(2);
    int sm = sign_at(z, m);
    if (sm == 0) {
      r = {RatInterval(m), true};
      return;
    }
    if (sm == sign_at(z, r.iv.lo)) {
      r.iv = RatInterval(m, r.iv.hi);
    } else {
      r.iv = RatInterval(r.iv.lo, m);
    }
  };
  bool dirty = true;
  while (dirty) {
    dirty = false;
    std::sort(all.begin(), all.end(),
              [](const RealRoot& x, const RealRoot& y) { return x.iv.lo < y.iv.lo; });
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      if (all[i].iv.hi >= all[i + 1].iv.lo) {
        if (!all[i].exact) bisect_once(all[i]);
        if (!all[i + 1].exact) bisect_once(all[i + 1]);
        dirty = true;
      }
    }
  }

  return RootList{std::move(all)};
}

// Shrinks an isolating interval to the requested width by sign bisection.
// Dyadic midpoints keep coefficient growth linear in depth; non-dyadic input
// endpoints are snapped inward to a dyadic grid first (verified by recount),
// so the result is contained in the input. Exact roots pass through as
// degenerate intervals.
inline RatInterval refine(const UniPoly& p, const RatInterval& iv, const Rational& target_width) {
  if (p.is_zero()) throw InputError("refine: zero polynomial");
  if (target_width.sign() <= 0) throw InputError("refine: target width must be positive");
  ZPoly z = square_free_part_z(to_integer_poly(p));
  if (z.degree() < 1) throw NotIsolatingError("refine: constant polynomial has no roots");

  if (iv.is_exact()) {
    if (sign_at(z, iv.lo) != 0) throw NotIsolatingError("refine: degenerate interval is not a root");
    return iv;
  }

  bool root_lo = sign_at(z, iv.lo) == 0;
  bool root_hi = sign_at(z, iv.hi) == 0;
  if (root_lo && root_hi) throw NotIsolatingError("refine: both endpoints are roots");
  if (root_lo || root_hi) {
    // The root at the endpoint must be the only one in iv.
    Rational r = root_lo ? iv.lo : iv.hi;
    UniPoly w = divrem(to_rational_poly(z), UniPoly(std::vector<Rational>{-r, 1})).first;
    ZPoly wz = to_integer_poly(w);
    auto chain = sturm_chain_z(wz);
    if (sturm_count(chain, iv.lo, iv.hi) != 0)
      throw NotIsolatingError("refine: more than one root in interval");
    return RatInterval(r);
  }

  auto chain = sturm_chain_z(z);
  if (sturm_count(chain, iv.lo, iv.hi) != 1)
    throw NotIsolatingError("refine: interval does not isolate exactly one root");

  Rational a = iv.lo, b = iv.hi;
  if (!is_dyadic(a) || !is_dyadic(b)) {
    // Inward dyadic snap, verified to still hold the root.
    unsigned k = 3;
    Rational w8 = iv.width() / Rational(8);
    while (pow(Rational(1, 2), k) > w8) ++k;
    while (true) {
      Integer scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 2, k);
      Rational sa(ceil(iv.lo * Rational(scale)), scale);
      Rational sb(floor(iv.hi * Rational(scale)), scale);
      if (sa <= sb) {
        if (sign_at(z, sa) == 0) return RatInterval(sa);
        if (sign_at(z, sb) == 0) return RatInterval(sb);
        if (sa < sb && sturm_count(chain, sa, sb) == 1) {
          a = sa;
          b = sb;
          break;
        }
      }
      k += 4;
    }
  }

  int sa = sign_at(z, a);
  while (b - a > target_width) {
    Rational m = (a + b) / Rational(2);
    int sm = sign_at(z, m);
    if (sm == 0) return RatInterval(m);
    if (sm == sa) {
      a = m;
    } else {
      b = m;
    }
  }
  return RatInterval(a, b);
}

// Distinct real roots of p in (a, b]; endpoints must not be roots.
inline int count_real_roots(const UniPoly& p, const Rational& a, const Rational& b) {
  ZPoly z = to_integer_poly(p);
  auto chain = sturm_chain_z(z);
  return sturm_count(chain, a, b);
}

}  // namespace curvetop
