#pragma once

#include <cassert>
#include <cstdint>
#include <ostream>
#include <string>

#include "cvxdual/common.hpp"
#include "cvxdual/int.hpp"
#include "cvxdual/rat.hpp"
#include "cvxdual/rng.hpp"

namespace cvxdual {

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

/// Default working prime: 2^31 - 1.
inline constexpr std::uint32_t kDefaultPrime = 2147483647u;

/// Draws a uniform prime from [2^30, 2^31).
inline std::uint32_t random_prime(Rng& rng) {
  for (;;) {
    std::uint64_t c = (1ULL << 30) + rng.next_below(1ULL << 30);
    c |= 1;
    if (is_prime_u64(c)) return static_cast<std::uint32_t>(c);
  }
}

/// Element of the prime field Z/p for a runtime prime p < 2^31.  Elements
/// carry their modulus; mixing moduli is a programming error.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(std::uint32_t value, std::uint32_t p) : v_(value % p), p_(p) {
    assert(p >= 2);
  }

  static Fp zero(std::uint32_t p) { return Fp(0, p); }
  static Fp one(std::uint32_t p) { return Fp(1 % p, p); }
  static Fp from_int(const Int& n, std::uint32_t p) {
    return Fp(n.mod_u32(p), p);
  }
  /// Reduces a rational; the denominator must be a unit mod p.
  static Fp from_rat(const Rat& r, std::uint32_t p) {
    Fp d = from_int(r.den(), p);
    if (d.v_ == 0)
      throw math_error("rational has denominator divisible by prime " +
                       std::to_string(p));
    return from_int(r.num(), p) * d.inv();
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  friend Fp operator+(Fp a, Fp b) {
    assert(a.p_ == b.p_);
    std::uint32_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return Fp::raw(s, a.p_);
  }
  friend Fp operator-(Fp a, Fp b) {
    assert(a.p_ == b.p_);
    std::uint32_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_;
    return Fp::raw(s, a.p_);
  }
  friend Fp operator*(Fp a, Fp b) {
    assert(a.p_ == b.p_);
    return Fp::raw(static_cast<std::uint32_t>(
                       static_cast<std::uint64_t>(a.v_) * b.v_ % a.p_),
                   a.p_);
  }
  Fp operator-() const { return Fp::raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  Fp inv() const {
    if (v_ == 0) throw math_error("inverse of zero in prime field");
    std::int64_t t = 0, nt = 1, r = p_, nr = v_;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p_;
    return Fp::raw(static_cast<std::uint32_t>(t), p_);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  Fp& operator/=(Fp o) { return *this = *this / o; }

  friend bool operator==(Fp a, Fp b) {
    assert(a.p_ == b.p_ || a.p_ == 0 || b.p_ == 0);
    return a.v_ == b.v_ && a.p_ == b.p_;
  }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }

  std::string str() const { return std::to_string(v_); }
  friend std::ostream& operator<<(std::ostream& os, Fp a) {
    return os << a.v_;
  }

 private:
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp f;
    f.v_ = v;
    f.p_ = p;
    return f;
  }
  std::uint32_t v_;
  std::uint32_t p_;
};

}  // namespace cvxdual
