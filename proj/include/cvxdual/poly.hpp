#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cvxdual/matrix.hpp"
#include "cvxdual/ring.hpp"
#include "cvxdual/upoly.hpp"

namespace cvxdual {

template <class K>
struct Term {
  Mono m;
  K c;
};

/// Multivariate polynomial: term list sorted strictly descending in the
/// active monomial order, no zero coefficients, no duplicate monomials.
template <class K>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr<K> ring, Order ord = Order::grevlex())
      : ring_(std::move(ring)), ord_(ord) {}

  static Polynomial from_terms(RingPtr<K> ring, Order ord,
                               std::vector<Term<K>> ts) {
    Polynomial p(std::move(ring), ord);
    int ar = p.ring_->arity();
    std::sort(ts.begin(), ts.end(), [&](const Term<K>& a, const Term<K>& b) {
      return cmp_mono(a.m, b.m, ord, ar) > 0;
    });
    p.ts_.reserve(ts.size());
    for (auto& t : ts) {
      if (!p.ts_.empty() && p.ts_.back().m == t.m)
        p.ts_.back().c += t.c;
      else
        p.ts_.push_back(std::move(t));
      if (!p.ts_.empty() && p.ts_.back().c.is_zero()) p.ts_.pop_back();
    }
    return p;
  }
  /// Trusted constructor: ts must already be strictly descending in ord,
  /// zero-free and duplicate-free.
  static Polynomial from_sorted_terms(RingPtr<K> ring, Order ord,
                                      std::vector<Term<K>> ts) {
    Polynomial p(std::move(ring), ord);
    p.ts_ = std::move(ts);
    return p;
  }
  static Polynomial constant(RingPtr<K> ring, K c,
                             Order ord = Order::grevlex()) {
    Polynomial p(std::move(ring), ord);
    if (!c.is_zero()) p.ts_.push_back({Mono::one(), std::move(c)});
    return p;
  }
  static Polynomial variable(RingPtr<K> ring, int i, int exp = 1,
                             Order ord = Order::grevlex()) {
    Polynomial p(std::move(ring), ord);
    assert(i >= 0 && i < p.ring_->arity());
    if (exp == 0) return constant(p.ring_, p.ring_->one(), ord);
    p.ts_.push_back({Mono::var(i, exp), p.ring_->one()});
    return p;
  }

  const RingPtr<K>& ring() const { return ring_; }
  const Order& order() const { return ord_; }
  const std::vector<Term<K>>& terms() const { return ts_; }
  bool is_zero() const { return ts_.empty(); }
  bool is_constant() const {
    return ts_.empty() || (ts_.size() == 1 && ts_[0].m.is_one());
  }
  size_t num_terms() const { return ts_.size(); }
  const Mono& leading_mono() const {
    assert(!ts_.empty());
    return ts_[0].m;
  }
  const K& leading_coeff() const {
    assert(!ts_.empty());
    return ts_[0].c;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& t : ts_) d = std::max(d, t.m.degree());
    return d;
  }
  int degree_in(int var) const {
    int d = 0;
    for (const auto& t : ts_) d = std::max(d, t.m.exp(var));
    return d;
  }
  bool uses_var(int var) const {
    for (const auto& t : ts_)
      if (t.m.exp(var) > 0) return true;
    return false;
  }
  bool is_homogeneous() const {
    for (const auto& t : ts_)
      if (t.m.degree() != ts_[0].m.degree()) return false;
    return true;
  }

  /// Explicit re-sort to a new active order.
  Polynomial resorted(const Order& ord) const {
    if (ord == ord_) return *this;
    return from_terms(ring_, ord, ts_);
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return merged(a, b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return merged(a, b, true);
  }
  Polynomial operator-() const {
    Polynomial r(ring_, ord_);
    r.ts_.reserve(ts_.size());
    for (const auto& t : ts_) r.ts_.push_back({t.m, -t.c});
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_, a.ord_);
    std::vector<Term<K>> prod;
    prod.reserve(a.ts_.size() * b.ts_.size());
    for (const auto& ta : a.ts_)
      for (const auto& tb : b.ts_) prod.push_back({ta.m * tb.m, ta.c * tb.c});
    return from_terms(a.ring_, a.ord_, std::move(prod));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Scales by a coefficient.
  Polynomial scaled(const K& c) const {
    Polynomial r(ring_, ord_);
    if (c.is_zero()) return r;
    r.ts_.reserve(ts_.size());
    for (const auto& t : ts_) r.ts_.push_back({t.m, t.c * c});
    return r;
  }
  friend Polynomial operator*(const K& c, const Polynomial& p) {
    return p.scaled(c);
  }
  friend Polynomial operator*(const Polynomial& p, const K& c) {
    return p.scaled(c);
  }
  /// Multiplies by the term c * x^m.
  Polynomial term_scaled(const K& c, const Mono& m) const {
    Polynomial r(ring_, ord_);
    if (c.is_zero()) return r;
    r.ts_.reserve(ts_.size());
    for (const auto& t : ts_) r.ts_.push_back({t.m * m, t.c * c});
    return r;
  }

  /// a + c * x^m * b in one merge pass.
  friend Polynomial add_scaled(const Polynomial& a, const K& c, const Mono& m,
                               const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.ring_, a.ord_);
    if (c.is_zero()) return a;
    int ar = a.ring_->arity();
    r.ts_.reserve(a.ts_.size() + b.ts_.size());
    size_t i = 0, j = 0;
    while (i < a.ts_.size() || j < b.ts_.size()) {
      if (j == b.ts_.size()) {
        r.ts_.push_back(a.ts_[i++]);
        continue;
      }
      Mono mb = b.ts_[j].m * m;
      int cv = i == a.ts_.size() ? -1 : cmp_mono(a.ts_[i].m, mb, a.ord_, ar);
      if (cv > 0) {
        r.ts_.push_back(a.ts_[i++]);
      } else if (cv < 0) {
        r.ts_.push_back({mb, b.ts_[j].c * c});
        ++j;
      } else {
        K s = a.ts_[i].c;
        s += b.ts_[j].c * c;
        if (!s.is_zero()) r.ts_.push_back({a.ts_[i].m, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    a.check_compatible_ring(b);
    const Polynomial& bb = a.ord_ == b.ord_ ? b : b.resorted(a.ord_);
    if (a.ts_.size() != bb.ts_.size()) return false;
    for (size_t i = 0; i < a.ts_.size(); ++i)
      if (a.ts_[i].m != bb.ts_[i].m || !(a.ts_[i].c == bb.ts_[i].c))
        return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  Polynomial derivative(int var) const {
    assert(var >= 0 && var < ring_->arity());
    std::vector<Term<K>> out;
    out.reserve(ts_.size());
    for (const auto& t : ts_) {
      int e = t.m.exp(var);
      if (e == 0) continue;
      K c = t.c * scalar_from_long(e, ring_->one());
      if (c.is_zero()) continue;
      Mono m = t.m;
      m.set_exp(var, e - 1);
      out.push_back({m, std::move(c)});
    }
    return from_terms(ring_, ord_, std::move(out));
  }

  /// Simultaneous substitution var -> polynomial for the given indices.
  Polynomial substituted(const std::map<int, Polynomial>& assign) const {
    Polynomial acc(ring_, ord_);
    std::map<int, std::vector<Polynomial>> pows;
    for (const auto& t : ts_) {
      Polynomial term = constant(ring_, t.c, ord_);
      Mono rest = Mono::one();
      for (int v = 0; v < ring_->arity(); ++v) {
        int e = t.m.exp(v);
        if (e == 0) continue;
        auto it = assign.find(v);
        if (it == assign.end()) {
          rest.set_exp(v, e);
          continue;
        }
        term = term * power_of(it->second, e, pows[v]);
      }
      acc = add_scaled(acc, ring_->one(), rest, term);
    }
    return acc;
  }

  /// Full evaluation at a point.
  K evaluate(const std::vector<K>& point) const {
    assert(static_cast<int>(point.size()) == ring_->arity());
    K acc = ring_->zero();
    for (const auto& t : ts_) {
      K v = t.c;
      for (int i = 0; i < ring_->arity(); ++i)
        for (int e = 0; e < t.m.exp(i); ++e) v *= point[i];
      acc += v;
    }
    return acc;
  }

  /// Quotient p / d when the division is exact.
  friend std::optional<Polynomial> exact_divide(const Polynomial& p,
                                                const Polynomial& d) {
    p.check_compatible(d);
    if (d.is_zero()) throw math_error("exact_divide by zero polynomial");
    Polynomial r = p;
    Polynomial q(p.ring_, p.ord_);
    const Mono& dm = d.leading_mono();
    while (!r.is_zero()) {
      if (!dm.divides(r.leading_mono())) return std::nullopt;
      K c = r.leading_coeff() / d.leading_coeff();
      Mono m = r.leading_mono() / dm;
      q.ts_.push_back({m, c});
      r = add_scaled(r, -c, m, d);
    }
    // Quotient monomials can arrive out of order; normalize.
    return from_terms(p.ring_, p.ord_, std::move(q.ts_));
  }

  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.str();
  }

  void check_compatible(const Polynomial& o) const {
    check_compatible_ring(o);
    if (!(ord_ == o.ord_))
      throw math_error("monomial order mismatch; resort explicitly");
  }
  void check_compatible_ring(const Polynomial& o) const {
    if (ring_.get() != o.ring_.get() && !ring_->same_as(*o.ring_))
      throw math_error("ring mismatch between polynomial operands");
  }

 private:
  static Polynomial merged(const Polynomial& a, const Polynomial& b,
                           bool subtract) {
    a.check_compatible(b);
    Polynomial r(a.ring_, a.ord_);
    int ar = a.ring_->arity();
    r.ts_.reserve(a.ts_.size() + b.ts_.size());
    size_t i = 0, j = 0;
    while (i < a.ts_.size() || j < b.ts_.size()) {
      int cv;
      if (i == a.ts_.size())
        cv = -1;
      else if (j == b.ts_.size())
        cv = 1;
      else
        cv = cmp_mono(a.ts_[i].m, b.ts_[j].m, a.ord_, ar);
      if (cv > 0) {
        r.ts_.push_back(a.ts_[i++]);
      } else if (cv < 0) {
        r.ts_.push_back({b.ts_[j].m, subtract ? -b.ts_[j].c : b.ts_[j].c});
        ++j;
      } else {
        K s = subtract ? a.ts_[i].c - b.ts_[j].c : a.ts_[i].c + b.ts_[j].c;
        if (!s.is_zero()) r.ts_.push_back({a.ts_[i].m, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  static Polynomial power_of(const Polynomial& base, int e,
                             std::vector<Polynomial>& cache) {
    if (cache.empty()) {
      cache.push_back(constant(base.ring_, base.ring_->one(), base.ord_));
      cache.push_back(base);
    }
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * base);
    return cache[e];
  }

  RingPtr<K> ring_;
  Order ord_;
  std::vector<Term<K>> ts_;
};

namespace detail {
inline int coeff_sign(const Rat& c) { return c.sign(); }
inline int coeff_sign(const Int& c) { return c.sign(); }
inline int coeff_sign(const Fp&) { return 1; }
inline Rat coeff_abs(const Rat& c) { return abs(c); }
inline Int coeff_abs(const Int& c) { return abs(c); }
inline Fp coeff_abs(const Fp& c) { return c; }
}  // namespace detail

template <class K>
std::string Polynomial<K>::str() const {
  if (ts_.empty()) return "0";
  std::string s;
  for (const auto& t : ts_) {
    int sg = detail::coeff_sign(t.c);
    K a = detail::coeff_abs(t.c);
    if (s.empty()) {
      if (sg < 0) s += "-";
    } else {
      s += sg < 0 ? " - " : " + ";
    }
    bool unit = a.is_one();
    if (t.m.is_one() || !unit) s += a.str();
    bool first = !t.m.is_one() && !unit;
    for (int v = 0; v < ring_->arity(); ++v) {
      int e = t.m.exp(v);
      if (e == 0) continue;
      if (first) s += "*";
      first = true;
      s += ring_->name(v);
      if (e > 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

/// div_exact over polynomials (Bareiss support); throws when not divisible.
template <class K>
Polynomial<K> div_exact(const Polynomial<K>& a, const Polynomial<K>& b) {
  auto q = exact_divide(a, b);
  if (!q) throw math_error("polynomial division is not exact");
  return *q;
}

/// True when a and b differ by a nonzero constant factor.
template <class K>
bool proportional(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.scaled(b.leading_coeff()) == b.scaled(a.leading_coeff());
}

/// Homogenizes into a ring extended by newvar (appended last).
template <class K>
Polynomial<K> homogenize(const Polynomial<K>& p, const std::string& newvar) {
  const auto& r = *p.ring();
  if (r.index_of(newvar) >= 0)
    throw math_error("homogenization variable collides: " + newvar);
  auto names = r.names();
  names.push_back(newvar);
  auto r2 = std::make_shared<const Ring<K>>(std::move(names), r.one());
  int nv = r2->arity() - 1;
  int d = std::max(p.total_degree(), 0);
  std::vector<Term<K>> out;
  out.reserve(p.num_terms());
  for (const auto& t : p.terms()) {
    Mono m = t.m;
    m.set_exp(nv, d - t.m.degree());
    out.push_back({m, t.c});
  }
  return Polynomial<K>::from_terms(r2, p.order(), std::move(out));
}

/// Sets var = 1; the result stays in the same ring.
template <class K>
Polynomial<K> dehomogenize(const Polynomial<K>& p, int var) {
  std::vector<Term<K>> out;
  out.reserve(p.num_terms());
  for (const auto& t : p.terms()) {
    Mono m = t.m;
    m.set_exp(var, 0);
    out.push_back({m, t.c});
  }
  return Polynomial<K>::from_terms(p.ring(), p.order(), std::move(out));
}

/// Reindexes p into ring r2; idx_map[i] is the position of variable i of the
/// source ring in r2, or -1 for a variable the polynomial must not use.
template <class K>
Polynomial<K> map_to_ring(const Polynomial<K>& p, const RingPtr<K>& r2,
                          const std::vector<int>& idx_map) {
  std::vector<Term<K>> out;
  out.reserve(p.num_terms());
  for (const auto& t : p.terms()) {
    Mono m = Mono::one();
    for (int v = 0; v < p.ring()->arity(); ++v) {
      int e = t.m.exp(v);
      if (e == 0) continue;
      if (idx_map[v] < 0)
        throw math_error("polynomial uses a variable dropped by ring map: " +
                         p.ring()->name(v));
      m.set_exp(idx_map[v], e);
    }
    out.push_back({m, t.c});
  }
  return Polynomial<K>::from_terms(r2, p.order(), std::move(out));
}

/// Maps by matching variable names; target must contain every used variable.
template <class K>
Polynomial<K> map_by_names(const Polynomial<K>& p, const RingPtr<K>& r2) {
  std::vector<int> idx(p.ring()->arity());
  for (int v = 0; v < p.ring()->arity(); ++v)
    idx[v] = r2->index_of(p.ring()->name(v));
  return map_to_ring(p, r2, idx);
}

/// Coefficients of powers of var: result[k] collects terms with var^k, with
/// that exponent cleared.
template <class K>
std::vector<Polynomial<K>> coeffs_in_var(const Polynomial<K>& p, int var) {
  int d = p.degree_in(var);
  std::vector<std::vector<Term<K>>> buckets(d + 1);
  for (const auto& t : p.terms()) {
    Mono m = t.m;
    int e = m.exp(var);
    m.set_exp(var, 0);
    buckets[e].push_back({m, t.c});
  }
  std::vector<Polynomial<K>> out;
  out.reserve(d + 1);
  for (auto& b : buckets)
    out.push_back(Polynomial<K>::from_terms(p.ring(), p.order(), std::move(b)));
  return out;
}

/// Univariate view of a polynomial in Q that uses only var.
inline UPoly to_upoly(const Polynomial<Rat>& p, int var) {
  std::vector<Rat> c(p.degree_in(var) + 1, Rat(0));
  for (const auto& t : p.terms()) {
    if (t.m.degree() != t.m.exp(var))
      throw math_error("polynomial is not univariate in " +
                       p.ring()->name(var));
    c[t.m.exp(var)] += t.c;
  }
  return UPoly(std::move(c));
}

/// Content of an integer polynomial: positive gcd of coefficients.
inline Int content(const Polynomial<Int>& p) {
  Int g(0);
  for (const auto& t : p.terms()) {
    g = gcd(g, t.c);
    if (g.is_one()) break;
  }
  return g;
}

/// Divides out the content and makes the leading coefficient positive.
inline Polynomial<Int> primitive_part(const Polynomial<Int>& p) {
  if (p.is_zero()) return p;
  Int g = content(p);
  if (p.leading_coeff().sign() < 0) g = -g;
  if (g.is_one()) return p;
  std::vector<Term<Int>> out;
  out.reserve(p.num_terms());
  for (const auto& t : p.terms()) out.push_back({t.m, div_exact(t.c, g)});
  return Polynomial<Int>::from_terms(p.ring(), p.order(), std::move(out));
}

template <class K>
Polynomial<K> make_monic(const Polynomial<K>& p) {
  if (p.is_zero() || p.leading_coeff().is_one()) return p;
  K inv = p.ring()->one() / p.leading_coeff();
  return p.scaled(inv);
}

/// Clears denominators: returns the integer polynomial lcm(dens) * p.
inline Polynomial<Int> clear_denominators(const Polynomial<Rat>& p,
                                          const RingPtr<Int>& r2) {
  Int l(1);
  for (const auto& t : p.terms()) l = lcm(l, t.c.den());
  std::vector<Term<Int>> out;
  out.reserve(p.num_terms());
  for (const auto& t : p.terms()) {
    Rat c = t.c * Rat(l);
    out.push_back({t.m, c.num()});
  }
  return Polynomial<Int>::from_terms(r2, p.order(), std::move(out));
}

inline Polynomial<Rat> to_rat_poly(const Polynomial<Int>& p,
                                   const RingPtr<Rat>& r2) {
  std::vector<Term<Rat>> out;
  out.reserve(p.num_terms());
  for (const auto& t : p.terms()) out.push_back({t.m, Rat(t.c)});
  return Polynomial<Rat>::from_terms(r2, p.order(), std::move(out));
}

/// Reduction mod p; throws when a denominator vanishes mod p.
inline Polynomial<Fp> to_fp_poly(const Polynomial<Rat>& p,
                                 const RingPtr<Fp>& r2) {
  std::uint32_t mod = r2->one().modulus();
  std::vector<Term<Fp>> out;
  out.reserve(p.num_terms());
  for (const auto& t : p.terms()) {
    Fp c = Fp::from_rat(t.c, mod);
    if (!c.is_zero()) out.push_back({t.m, c});
  }
  return Polynomial<Fp>::from_terms(r2, p.order(), std::move(out));
}

/// Evaluation of a rational polynomial at a double point.
inline double evaluate_double(const Polynomial<Rat>& p,
                              const std::vector<double>& x) {
  assert(static_cast<int>(x.size()) == p.ring()->arity());
  double acc = 0;
  for (const auto& t : p.terms()) {
    double v = t.c.to_double();
    for (int i = 0; i < p.ring()->arity(); ++i)
      for (int e = 0; e < t.m.exp(i); ++e) v *= x[i];
    acc += v;
  }
  return acc;
}

}  // namespace cvxdual
