#pragma once

#include <gmp.h>

#include <cassert>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "cvxdual/common.hpp"
#include "cvxdual/int.hpp"

namespace cvxdual {

/// Arbitrary-precision rational in canonical form (reduced, denominator > 0).
class Rat {
 public:
  Rat() { mpq_init(q_); }
  Rat(int v) {
    mpq_init(q_);
    mpq_set_si(q_, v, 1);
  }
  Rat(long v) {
    mpq_init(q_);
    mpq_set_si(q_, v, 1);
  }
  Rat(long num, long den) {
    if (den == 0) throw math_error("rational with zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
  }
  Rat(const Int& v) {
    mpq_init(q_);
    mpq_set_z(q_, v.raw());
  }
  Rat(const Int& num, const Int& den) {
    if (den.is_zero()) throw math_error("rational with zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
  }

  /// Parses "a" or "a/b" in base 10.
  explicit Rat(const std::string& s) {
    mpq_init(q_);
    if (mpq_set_str(q_, s.c_str(), 10) != 0 ||
        mpz_sgn(mpq_denref(q_)) == 0) {
      mpq_clear(q_);
      throw math_error("invalid rational literal: " + s);
    }
    mpq_canonicalize(q_);
  }

  Rat(const Rat& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rat(Rat&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rat& operator=(const Rat& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rat& operator=(Rat&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rat() { mpq_clear(q_); }

  void swap(Rat& o) noexcept { mpq_swap(q_, o.q_); }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_one() const { return mpq_cmp_ui(q_, 1, 1) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  int sign() const { return mpq_sgn(q_); }

  Int num() const {
    Int n;
    mpz_set(n.raw(), mpq_numref(q_));
    return n;
  }
  Int den() const {
    Int d;
    mpz_set(d.raw(), mpq_denref(q_));
    return d;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    Rat r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    Rat r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    Rat r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw math_error("rational division by zero");
    Rat r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
  }
  Rat operator-() const {
    Rat r;
    mpq_neg(r.q_, q_);
    return r;
  }
  Rat& operator+=(const Rat& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  Rat inv() const {
    if (is_zero()) throw math_error("inverse of zero");
    Rat r;
    mpq_inv(r.q_, q_);
    return r;
  }
  friend Rat abs(const Rat& a) {
    Rat r;
    mpq_abs(r.q_, a.q_);
    return r;
  }
  friend Rat pow(const Rat& a, long e) {
    if (e < 0) return pow(a.inv(), -e);
    Rat r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(a.q_), e);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(a.q_), e);
    return r;
  }

  friend int cmp(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_); }
  friend bool operator==(const Rat& a, const Rat& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a, b) >= 0; }

  double to_double() const { return mpq_get_d(q_); }

  std::string str() const {
    std::string s = num().str();
    if (!is_integer()) s += "/" + den().str();
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const Rat& a) {
    return os << a.str();
  }

 private:
  mpq_t q_;
};

inline void swap(Rat& a, Rat& b) noexcept { a.swap(b); }

/// Best rational approximation of x with denominator at most max_den,
/// by truncating the continued fraction expansion at the last admissible
/// convergent.
inline Rat rationalize(double x, std::uint64_t max_den = 1000000) {
  if (!std::isfinite(x)) throw math_error("rationalize: non-finite input");
  bool neg = x < 0;
  double v = neg ? -x : x;
  Int p0(0), q0(1), p1(1), q1(0);
  double frac = v;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 9.2e18) break;
    Int a(static_cast<long long>(fl));
    Int p2 = a * p1 + p0;
    Int q2 = a * q1 + q0;
    if (q2 > Int(static_cast<unsigned long>(max_den))) break;
    p0 = std::move(p1);
    q0 = std::move(q1);
    p1 = std::move(p2);
    q1 = std::move(q2);
    double rem = frac - fl;
    if (rem < 1e-18) break;
    frac = 1.0 / rem;
  }
  if (q1.is_zero()) return Rat(0);
  Rat r(p1, q1);
  return neg ? -r : r;
}

}  // namespace cvxdual
