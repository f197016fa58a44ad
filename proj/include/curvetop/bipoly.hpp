#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "curvetop/errors.hpp"
#include "curvetop/roots.hpp"

namespace curvetop {

// Sparse bivariate polynomial over the rationals: exponent pair -> nonzero
// coefficient. Immutable in spirit; all operations return new values.
class BiPoly {
 public:
  using Exp = std::pair<unsigned, unsigned>;  // (e_x, e_y)
  using TermMap = std::map<Exp, Rational>;

  BiPoly() = default;
  explicit BiPoly(Rational constant) { add_term(0, 0, std::move(constant)); }

  static BiPoly var_x() { return monomial(1, 0, Rational(1)); }
  static BiPoly var_y() { return monomial(0, 1, Rational(1)); }
  static BiPoly monomial(unsigned ex, unsigned ey, Rational c) {
    BiPoly p;
    p.add_term(ex, ey, std::move(c));
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(unsigned ex, unsigned ey, Rational c) {
    if (c.is_zero()) return;
    auto it = terms_.find({ex, ey});
    if (it == terms_.end()) {
      terms_.emplace(Exp{ex, ey}, std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Rational coeff(unsigned ex, unsigned ey) const {
    auto it = terms_.find({ex, ey});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int degree_x() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.first));
    return d;
  }
  int degree_y() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.second));
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.first + e.second));
    return d;
  }

  friend BiPoly operator-(const BiPoly& a) {
    BiPoly r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, c);
    return r;
  }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, -c);
    return r;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
  }
  friend BiPoly operator*(const BiPoly& a, const Rational& s) {
    BiPoly r;
    if (s.is_zero()) return r;
    r.terms_ = a.terms_;
    for (auto& [e, c] : r.terms_) c = c * s;
    return r;
  }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly derivative_x() const {
    BiPoly r;
    for (const auto& [e, c] : terms_)
      if (e.first > 0) r.add_term(e.first - 1, e.second, c * Rational(Integer(e.first)));
    return r;
  }
  BiPoly derivative_y() const {
    BiPoly r;
    for (const auto& [e, c] : terms_)
      if (e.second > 0) r.add_term(e.first, e.second - 1, c * Rational(Integer(e.second)));
    return r;
  }

  Rational eval(const Rational& x, const Rational& y) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) acc += c * pow(x, e.first) * pow(y, e.second);
    return acc;
  }

  // y-recursive view: coefficient of y^j as a polynomial in x.
  DensePoly<UniPoly> to_y_recursive() const {
    int dy = degree_y();
    if (dy < 0) return {};
    std::vector<std::vector<Rational>> cols(static_cast<std::size_t>(dy) + 1);
    int dx = degree_x();
    for (auto& col : cols) col.assign(static_cast<std::size_t>(dx) + 1, Rational(0));
    for (const auto& [e, c] : terms_) cols[e.second][e.first] = c;
    std::vector<UniPoly> ycoeffs;
    ycoeffs.reserve(cols.size());
    for (auto& col : cols) ycoeffs.emplace_back(std::move(col));
    return DensePoly<UniPoly>(std::move(ycoeffs));
  }

  static BiPoly from_y_recursive(const DensePoly<UniPoly>& p) {
    BiPoly r;
    for (int j = 0; j <= p.degree(); ++j) {
      const UniPoly& cx = p[static_cast<std::size_t>(j)];
      for (int i = 0; i <= cx.degree(); ++i)
        r.add_term(static_cast<unsigned>(i), static_cast<unsigned>(j),
                   cx[static_cast<std::size_t>(i)]);
    }
    return r;
  }

  // Coefficient of y^degree_y as a polynomial in x.
  UniPoly leading_y_coeff() const {
    int dy = degree_y();
    UniPoly r;
    if (dy < 0) return r;
    for (const auto& [e, c] : terms_)
      if (static_cast<int>(e.second) == dy) r.set_coeff(e.first, c);
    return r;
  }

 private:
  TermMap terms_;
};

// f(a, y) as a dense polynomial in y with exact coefficients.
inline UniPoly specialize_x(const BiPoly& p, const Rational& a) {
  UniPoly r;
  auto rec = p.to_y_recursive();
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(rec.degree() + 1));
  for (int j = 0; j <= rec.degree(); ++j) c.push_back(rec[static_cast<std::size_t>(j)].eval(a));
  return UniPoly(std::move(c));
}

// f(x, b) as a dense polynomial in x.
inline UniPoly specialize_y(const BiPoly& p, const Rational& b) {
  UniPoly r;
  int dx = p.degree_x();
  if (dx < 0) return r;
  std::vector<Rational> c(static_cast<std::size_t>(dx) + 1, Rational(0));
  for (const auto& [e, co] : p.terms()) c[e.first] += co * pow(b, e.second);
  return UniPoly(std::move(c));
}

inline BiPoly partial_derivative(const BiPoly& p, char var) {
  return var == 'x' ? p.derivative_x() : p.derivative_y();
}

// p(x + t*y, y): the horizontal shear used to reach generic position.
// Invertible (shear by -t), preserves total degree.
inline BiPoly shear(const BiPoly& p, const Rational& t) {
  if (t.is_zero()) return p;
  BiPoly r;
  for (const auto& [e, c] : p.terms()) {
    // (x + t y)^a expanded by binomials.
    Integer binom = 1;
    Rational tp(1);
    for (unsigned k = 0; k <= e.first; ++k) {
      r.add_term(e.first - k, e.second + k, c * Rational(binom) * tp);
      binom = binom * Integer(e.first - k) / Integer(k + 1);
      tp *= t;
    }
  }
  return r;
}

// Interval enclosure of f over the box X x Y: Horner in y over interval
// evaluations of the x-coefficients. Exact endpoints, no rounding.
inline RatInterval eval_box(const BiPoly& p, const RatInterval& X, const RatInterval& Y) {
  auto rec = p.to_y_recursive();
  if (rec.is_zero()) return RatInterval(Rational(0));
  RatInterval acc = rec[static_cast<std::size_t>(rec.degree())].eval(X);
  for (int j = rec.degree(); j-- > 0;)
    acc = acc * Y + rec[static_cast<std::size_t>(j)].eval(X);
  return acc;
}

// Monic gcd over Q.
inline UniPoly gcd_poly(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) return {};
  ZPoly g = gcd_z(to_integer_poly(p), to_integer_poly(q));
  UniPoly r = to_rational_poly(g);
  if (!r.is_zero() && !(r.lc() == Rational(1))) r = r * (Rational(1) / r.lc());
  return r;
}

namespace detail {

// Content of p in y: gcd over Q[x] of the y-coefficients, primitive with
// positive leading coefficient.
inline UniPoly content_in_y(const BiPoly& p) {
  ZPoly g;
  auto rec = p.to_y_recursive();
  for (int j = 0; j <= rec.degree(); ++j) {
    const UniPoly& c = rec[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    g = g.is_zero() ? primitive_part(to_integer_poly(c)) : gcd_z(g, to_integer_poly(c));
    if (g.degree() == 0) break;
  }
  if (!g.is_zero() && sgn(g.lc()) < 0) g = -g;
  return to_rational_poly(g);
}

// gcd in Q[x][y] by a primitive PRS over UniPoly coefficients.
inline DensePoly<UniPoly> gcd_bivariate(DensePoly<UniPoly> a, DensePoly<UniPoly> b) {
  auto content_of = [](const DensePoly<UniPoly>& p) {
    UniPoly g;
    for (int j = 0; j <= p.degree(); ++j) {
      const UniPoly& c = p[static_cast<std::size_t>(j)];
      if (c.is_zero()) continue;
      g = g.is_zero() ? c : gcd_poly(g, c);
      if (g.degree() == 0) break;
    }
    return g;
  };
  auto primitive = [&](DensePoly<UniPoly>& p) {
    UniPoly c = content_of(p);
    if (!c.is_zero() && c.degree() >= 1) {
      std::vector<UniPoly> q;
      for (int j = 0; j <= p.degree(); ++j)
        q.push_back(ring_exact_div(p[static_cast<std::size_t>(j)], c));
      p = DensePoly<UniPoly>(std::move(q));
    }
    return c;
  };

  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  UniPoly ca = primitive(a), cb = primitive(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    DensePoly<UniPoly> r = pseudo_rem(a, b);
    a = std::move(b);
    b = std::move(r);
    primitive(b);
  }
  return a * DensePoly<UniPoly>(gcd_poly(ca, cb));
}

}  // namespace detail

// Normalizes to integer coefficients with content 1 and positive coefficient
// on the graded-lex leading term. Pure-scale normalization: same zero set.
inline BiPoly normalize_primitive(const BiPoly& p) {
  if (p.is_zero()) return p;
  Integer l = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  Integer g = 0;
  for (const auto& [e, c] : p.terms()) {
    Integer n = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  BiPoly r = p * Rational(l, g);
  // Positive sign on the graded-lex greatest term.
  const BiPoly::Exp* lead = nullptr;
  const Rational* lead_c = nullptr;
  for (const auto& [e, c] : r.terms()) {
    if (!lead) {
      lead = &e;
      lead_c = &c;
      continue;
    }
    unsigned ta = e.first + e.second, tb = lead->first + lead->second;
    if (ta > tb || (ta == tb && e.first > lead->first)) {
      lead = &e;
      lead_c = &c;
    }
  }
  if (lead_c->sign() < 0) r = -r;
  return r;
}

// Splits off the factors free of y (vertical-line components): returns
// (y_free, rest) with y_free * rest = p up to a rational unit and rest
// primitive in y.
inline std::pair<BiPoly, BiPoly> split_y_free(const BiPoly& p) {
  if (p.is_zero()) return {BiPoly(), BiPoly()};
  UniPoly cont = detail::content_in_y(p);
  BiPoly y_free;
  for (int i = 0; i <= cont.degree(); ++i)
    y_free.add_term(static_cast<unsigned>(i), 0, cont[static_cast<std::size_t>(i)]);
  if (cont.degree() < 1) return {normalize_primitive(y_free), normalize_primitive(p)};
  auto rec = p.to_y_recursive();
  std::vector<UniPoly> q;
  for (int j = 0; j <= rec.degree(); ++j)
    q.push_back(ring_exact_div(rec[static_cast<std::size_t>(j)], cont));
  BiPoly rest = BiPoly::from_y_recursive(DensePoly<UniPoly>(std::move(q)));
  return {normalize_primitive(y_free), normalize_primitive(rest)};
}

// Square-free part: divides p, has the same real zero set, no repeated
// factors. Computed separately on the y-free content (univariate) and the
// y-primitive part (bivariate PRS gcd with the y-derivative).
inline BiPoly square_free_part(const BiPoly& p) {
  if (p.is_zero()) return p;
  if (p.total_degree() == 0) return normalize_primitive(p);
  auto [y_free, rest] = split_y_free(p);

  BiPoly sf_content(Rational(1));
  if (y_free.degree_x() >= 1) {
    UniPoly cx;
    for (const auto& [e, c] : y_free.terms()) cx.set_coeff(e.first, c);
    ZPoly sf = square_free_part_z(to_integer_poly(cx));
    BiPoly b;
    for (int i = 0; i <= sf.degree(); ++i)
      b.add_term(static_cast<unsigned>(i), 0, Rational(sf[static_cast<std::size_t>(i)]));
    sf_content = b;
  }

  BiPoly sf_rest(Rational(1));
  if (rest.degree_y() >= 1) {
    auto a = rest.to_y_recursive();
    auto g = detail::gcd_bivariate(a, rest.derivative_y().to_y_recursive());
    sf_rest = BiPoly::from_y_recursive(ring_exact_div(a, g));
  } else if (rest.total_degree() >= 1) {
    sf_rest = rest;  // x-only rest cannot occur after split, but stay safe
  }

  return normalize_primitive(sf_content * sf_rest);
}

// Canonical printer: graded-lex descending (total degree, then x-exponent),
// explicit '*', coefficient/exponent 1 elided. parse(print(p)) == p.
inline std::string to_string(const BiPoly& p, const std::string& xvar = "x",
                             const std::string& yvar = "y") {
  if (p.is_zero()) return "0";
  std::vector<std::pair<BiPoly::Exp, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    unsigned ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
    if (ta != tb) return ta > tb;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    bool has_var = e.first > 0 || e.second > 0;
    bool coeff_one = a == Rational(1);
    if (!coeff_one || !has_var) os << a.to_string();
    bool need_star = !coeff_one && has_var;
    if (e.first > 0) {
      if (need_star) os << "*";
      os << xvar;
      if (e.first > 1) os << "^" << e.first;
      need_star = true;
    }
    if (e.second > 0) {
      if (need_star) os << "*";
      os << yvar;
      if (e.second > 1) os << "^" << e.second;
    }
  }
  return os.str();
}

}  // namespace curvetop
