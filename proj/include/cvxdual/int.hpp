#pragma once

#include <gmp.h>

#include <cassert>
#include <cstdint>
#include <iosfwd>
#include <ostream>
#include <string>
#include <utility>

#include "cvxdual/common.hpp"

namespace cvxdual {

/// Arbitrary-precision integer, a value type over GMP's mpz layer.
class Int {
 public:
  Int() { mpz_init(z_); }
  Int(int v) { mpz_init_set_si(z_, v); }
  Int(long v) { mpz_init_set_si(z_, v); }
  Int(long long v) {
    mpz_init(z_);
    bool neg = v < 0;
    unsigned long long u = neg ? -static_cast<unsigned long long>(v) : v;
    mpz_import(z_, 1, 1, sizeof(u), 0, 0, &u);
    if (neg) mpz_neg(z_, z_);
  }
  Int(unsigned long v) { mpz_init_set_ui(z_, v); }

  explicit Int(const std::string& s) {
    if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
      mpz_clear(z_);
      throw math_error("invalid integer literal: " + s);
    }
  }

  Int(const Int& o) { mpz_init_set(z_, o.z_); }
  Int(Int&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  Int& operator=(const Int& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  Int& operator=(Int&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~Int() { mpz_clear(z_); }

  void swap(Int& o) noexcept { mpz_swap(z_, o.z_); }

  bool is_zero() const { return mpz_sgn(z_) == 0; }
  bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
  int sign() const { return mpz_sgn(z_); }
  bool odd() const { return mpz_odd_p(z_) != 0; }

  friend Int operator+(const Int& a, const Int& b) {
    Int r;
    mpz_add(r.z_, a.z_, b.z_);
    return r;
  }
  friend Int operator-(const Int& a, const Int& b) {
    Int r;
    mpz_sub(r.z_, a.z_, b.z_);
    return r;
  }
  friend Int operator*(const Int& a, const Int& b) {
    Int r;
    mpz_mul(r.z_, a.z_, b.z_);
    return r;
  }
  Int operator-() const {
    Int r;
    mpz_neg(r.z_, z_);
    return r;
  }
  Int& operator+=(const Int& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  Int& operator-=(const Int& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
  }
  Int& operator*=(const Int& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }

  /// *this += a * b without a temporary.
  void addmul(const Int& a, const Int& b) { mpz_addmul(z_, a.z_, b.z_); }
  /// *this -= a * b without a temporary.
  void submul(const Int& a, const Int& b) { mpz_submul(z_, a.z_, b.z_); }

  /// Exact division; quotient must have no remainder.
  friend Int div_exact(const Int& a, const Int& b) {
    assert(!b.is_zero());
    Int r;
    mpz_divexact(r.z_, a.z_, b.z_);
    return r;
  }
  /// Floor division quotient.
  friend Int fdiv(const Int& a, const Int& b) {
    assert(!b.is_zero());
    Int r;
    mpz_fdiv_q(r.z_, a.z_, b.z_);
    return r;
  }
  /// Floor division remainder (same sign as b).
  friend Int fmod(const Int& a, const Int& b) {
    assert(!b.is_zero());
    Int r;
    mpz_fdiv_r(r.z_, a.z_, b.z_);
    return r;
  }
  bool divisible_by(const Int& b) const {
    return mpz_divisible_p(z_, b.z_) != 0;
  }

  friend Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.z_, a.z_, b.z_);
    return r;
  }
  friend Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.z_, a.z_, b.z_);
    return r;
  }
  friend Int abs(const Int& a) {
    Int r;
    mpz_abs(r.z_, a.z_);
    return r;
  }
  friend Int pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.z_, a.z_, e);
    return r;
  }

  friend int cmp(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_); }
  friend bool operator==(const Int& a, const Int& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Int& a, const Int& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Int& a, const Int& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Int& a, const Int& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Int& a, const Int& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Int& a, const Int& b) { return cmp(a, b) >= 0; }

  bool fits_slong() const { return mpz_fits_slong_p(z_) != 0; }
  long to_long() const {
    assert(fits_slong());
    return mpz_get_si(z_);
  }
  double to_double() const { return mpz_get_d(z_); }
  /// Residue in [0, p).
  std::uint32_t mod_u32(std::uint32_t p) const {
    return static_cast<std::uint32_t>(mpz_fdiv_ui(z_, p));
  }
  std::size_t bit_length() const { return mpz_sizeinbase(z_, 2); }

  std::string str() const {
    char* s = mpz_get_str(nullptr, 10, z_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
  }
  friend std::ostream& operator<<(std::ostream& os, const Int& a) {
    return os << a.str();
  }

  mpz_srcptr raw() const { return z_; }
  mpz_ptr raw() { return z_; }

 private:
  mpz_t z_;
};

inline void swap(Int& a, Int& b) noexcept { a.swap(b); }

}  // namespace cvxdual
