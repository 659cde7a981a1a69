#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cvxdual/common.hpp"
#include "cvxdual/rat.hpp"

namespace cvxdual {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly constant(const Rat& a) { return UPoly({a}); }
  static UPoly x() { return UPoly({Rat(0), Rat(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& operator[](int i) const { return c_[i]; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const {
    assert(!c_.empty());
    return c_.back();
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
      if (i < a.c_.size()) r[i] += a.c_[i];
      if (i < b.c_.size()) r[i] += b.c_[i];
    }
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
      if (i < a.c_.size()) r[i] += a.c_[i];
      if (i < b.c_.size()) r[i] -= b.c_[i];
    }
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const Rat& s, const UPoly& a) {
    std::vector<Rat> r = a.c_;
    for (auto& x : r) x *= s;
    return UPoly(std::move(r));
  }
  UPoly operator-() const { return Rat(-1) * *this; }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rat(long(i)) * c_[i];
    return UPoly(std::move(r));
  }

  Rat eval(const Rat& x) const {
    Rat r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }
  double eval(double x) const {
    double r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i].to_double();
    return r;
  }

  /// Euclidean division; returns (quotient, remainder).
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw math_error("univariate division by zero");
    UPoly r = a;
    std::vector<Rat> q(a.c_.size() > b.c_.size() - 1
                           ? a.c_.size() - b.c_.size() + 1
                           : 0);
    while (!r.is_zero() && r.degree() >= b.degree()) {
      Rat f = r.leading() / b.leading();
      int k = r.degree() - b.degree();
      q[k] = f;
      for (int i = 0; i <= b.degree(); ++i) r.c_[k + i] -= f * b.c_[i];
      r.trim();
    }
    return {UPoly(std::move(q)), std::move(r)};
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return leading().inv() * *this;
  }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::string str(const std::string& var = "t") const;

 private:
  std::vector<Rat> c_;
};

/// Monic gcd via the Euclidean algorithm.
inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'): same roots without multiplicity.
inline UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p;
  UPoly g = gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  return divmod(p, g).first;
}

/// Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k).
inline std::vector<UPoly> sturm_chain(const UPoly& p) {
  std::vector<UPoly> chain;
  chain.push_back(p);
  if (p.degree() <= 0) return chain;
  chain.push_back(p.derivative());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    UPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace detail {
inline int sign_variations_at(const std::vector<UPoly>& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const auto& q : chain) {
    int s = q.eval(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}
inline int sign_variations_at_inf(const std::vector<UPoly>& chain, int dir) {
  int var = 0, prev = 0;
  for (const auto& q : chain) {
    if (q.is_zero()) continue;
    int s = q.leading().sign();
    if (dir < 0 && q.degree() % 2 == 1) s = -s;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}
}  // namespace detail

/// Number of distinct real roots in (a, b]; requires a < b.
inline int sturm_count(const UPoly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw math_error("sturm count of the zero polynomial");
  if (!(a < b)) throw math_error("sturm count needs a < b");
  auto chain = sturm_chain(squarefree_part(p));
  return detail::sign_variations_at(chain, a) -
         detail::sign_variations_at(chain, b);
}

/// Number of distinct real roots on the whole line.
inline int sturm_count(const UPoly& p) {
  if (p.is_zero()) throw math_error("sturm count of the zero polynomial");
  auto chain = sturm_chain(squarefree_part(p));
  return detail::sign_variations_at_inf(chain, -1) -
         detail::sign_variations_at_inf(chain, +1);
}

/// Bound B with all real roots in [-B, B] (Cauchy bound).
inline Rat root_bound(const UPoly& p) {
  assert(!p.is_zero());
  Rat m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rat a = abs(p[i] / p.leading());
    if (a > m) m = a;
  }
  return m + Rat(1);
}

/// Isolating intervals (a, b] for every distinct real root, in increasing
/// order, by Sturm bisection.
inline std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UPoly& p) {
  UPoly q = squarefree_part(p);
  std::vector<std::pair<Rat, Rat>> out;
  if (q.degree() <= 0) return out;
  auto chain = sturm_chain(q);
  auto count = [&](const Rat& a, const Rat& b) {
    return detail::sign_variations_at(chain, a) -
           detail::sign_variations_at(chain, b);
  };
  Rat bound = root_bound(q);
  std::vector<std::pair<Rat, Rat>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int n = count(a, b);
    if (n == 0) continue;
    if (n == 1) {
      out.emplace_back(a, b);
      continue;
    }
    Rat mid = (a + b) * Rat(1, 2);
    // Nudge off a root so interval endpoints stay regular for bisection.
    if (q.eval(mid).is_zero()) mid = (a + Rat(3) * b) * Rat(1, 4);
    stack.emplace_back(mid, b);
    stack.emplace_back(a, mid);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& u, const auto& v) { return u.first < v.first; });
  return out;
}

/// Shrinks an isolating interval until b - a <= width; returns midpoint.
inline Rat refine_root(const UPoly& p, Rat a, Rat b, const Rat& width) {
  UPoly q = squarefree_part(p);
  auto chain = sturm_chain(q);
  auto count = [&](const Rat& x, const Rat& y) {
    return detail::sign_variations_at(chain, x) -
           detail::sign_variations_at(chain, y);
  };
  if (count(a, b) != 1) throw math_error("refine_root: not isolating");
  while (b - a > width) {
    Rat mid = (a + b) * Rat(1, 2);
    if (q.eval(mid).is_zero()) {
      Rat h = (b - a) * Rat(1, 4);
      if (h > width * Rat(1, 2)) h = width * Rat(1, 2);
      a = mid - h;
      b = mid + h;
      break;
    }
    if (count(a, mid) == 1)
      b = mid;
    else
      a = mid;
  }
  return (a + b) * Rat(1, 2);
}

inline std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    Rat a = c_[i];
    if (!s.empty()) {
      s += a.sign() > 0 ? " + " : " - ";
      a = abs(a);
    } else if (a.sign() < 0) {
      s += "-";
      a = abs(a);
    }
    bool unit = a.is_one();
    if (i == 0 || !unit) s += a.str();
    if (i > 0) {
      if (!unit) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace cvxdual
