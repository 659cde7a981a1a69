#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "cvxdual/common.hpp"
#include "cvxdual/fp.hpp"
#include "cvxdual/int.hpp"
#include "cvxdual/rat.hpp"

namespace cvxdual {

/// Hard cap on ring arity; exponent vectors are fixed-size dense arrays.
/// Every construction in scope stays well below this.
inline constexpr int kMaxArity = 24;

/// Polynomial ring descriptor: ordered variable names plus a coefficient
/// prototype (the multiplicative unit), which carries domain context such as
/// a prime-field modulus.
inline bool domain_matches(const Rat&, const Rat&) { return true; }
inline bool domain_matches(const Int&, const Int&) { return true; }
inline bool domain_matches(const Fp& a, const Fp& b) {
  return a.modulus() == b.modulus();
}

template <class K>
class Ring {
 public:
  Ring(std::vector<std::string> names, K one)
      : names_(std::move(names)), one_(std::move(one)) {
    if (names_.empty()) throw math_error("ring must have at least one variable");
    if (static_cast<int>(names_.size()) > kMaxArity)
      throw math_error("ring arity exceeds supported maximum of " +
                       std::to_string(kMaxArity));
    for (size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw math_error("empty variable name");
      for (size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw math_error("duplicate variable name: " + names_[i]);
    }
  }

  int arity() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  int index_of(const std::string& v) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == v) return static_cast<int>(i);
    return -1;
  }
  const K& one() const { return one_; }
  K zero() const { return one_ - one_; }

  bool same_as(const Ring& o) const {
    return names_ == o.names_ && domain_matches(one_, o.one_);
  }

 private:
  std::vector<std::string> names_;
  K one_;
};

template <class K>
using RingPtr = std::shared_ptr<const Ring<K>>;

inline RingPtr<Rat> make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring<Rat>>(std::move(names), Rat(1));
}
inline RingPtr<Int> make_int_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring<Int>>(std::move(names), Int(1));
}
inline RingPtr<Fp> make_fp_ring(std::vector<std::string> names,
                                std::uint32_t p) {
  if (!is_prime_u64(p) || p >= (1u << 31))
    throw math_error("modulus must be a prime below 2^31");
  return std::make_shared<const Ring<Fp>>(std::move(names), Fp::one(p));
}

/// Scalar constructors relative to a domain prototype.
inline Rat scalar_from_long(long v, const Rat&) { return Rat(v); }
inline Int scalar_from_long(long v, const Int&) { return Int(v); }
inline Fp scalar_from_long(long v, const Fp& proto) {
  return Fp::from_int(Int(v), proto.modulus());
}
inline Rat scalar_from_rat(const Rat& v, const Rat&) { return v; }
inline Int scalar_from_rat(const Rat& v, const Int&) {
  if (!v.is_integer()) throw math_error("non-integer scalar in integer ring");
  return v.num();
}
inline Fp scalar_from_rat(const Rat& v, const Fp& proto) {
  return Fp::from_rat(v, proto.modulus());
}

/// Monomial: dense exponent vector with cached total degree.  Entries past
/// the ring arity are zero, which keeps comparisons arity-independent.
class Mono {
 public:
  Mono() : deg_(0) { e_.fill(0); }

  static Mono one() { return Mono(); }
  static Mono var(int i, int exp = 1) {
    Mono m;
    m.e_[i] = static_cast<std::uint16_t>(exp);
    m.deg_ = exp;
    return m;
  }
  static Mono from_exponents(const std::vector<int>& exps) {
    assert(exps.size() <= kMaxArity);
    Mono m;
    for (size_t i = 0; i < exps.size(); ++i) {
      assert(exps[i] >= 0 && exps[i] <= 0xffff);
      m.e_[i] = static_cast<std::uint16_t>(exps[i]);
      m.deg_ += exps[i];
    }
    return m;
  }

  int degree() const { return deg_; }
  int exp(int i) const { return e_[i]; }
  bool is_one() const { return deg_ == 0; }

  void set_exp(int i, int v) {
    deg_ += v - e_[i];
    e_[i] = static_cast<std::uint16_t>(v);
  }

  friend Mono operator*(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxArity; ++i)
      r.e_[i] = static_cast<std::uint16_t>(a.e_[i] + b.e_[i]);
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }
  /// Quotient a / b; requires divisibility.
  friend Mono operator/(const Mono& a, const Mono& b) {
    assert(b.divides(a));
    Mono r;
    for (int i = 0; i < kMaxArity; ++i)
      r.e_[i] = static_cast<std::uint16_t>(a.e_[i] - b.e_[i]);
    r.deg_ = a.deg_ - b.deg_;
    return r;
  }
  bool divides(const Mono& a) const {
    for (int i = 0; i < kMaxArity; ++i)
      if (e_[i] > a.e_[i]) return false;
    return true;
  }
  friend Mono lcm(const Mono& a, const Mono& b) {
    Mono r;
    int d = 0;
    for (int i = 0; i < kMaxArity; ++i) {
      r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
      d += r.e_[i];
    }
    r.deg_ = d;
    return r;
  }
  friend bool coprime(const Mono& a, const Mono& b) {
    for (int i = 0; i < kMaxArity; ++i)
      if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Mono& a, const Mono& b) {
    return a.deg_ == b.deg_ &&
           std::memcmp(a.e_.data(), b.e_.data(),
                       sizeof(std::uint16_t) * kMaxArity) == 0;
  }
  friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }

 private:
  std::array<std::uint16_t, kMaxArity> e_;
  int deg_;
};

/// Monomial order: lex, grevlex, or an elimination block order that compares
/// the first k variables (grevlex) before the rest (grevlex).
struct Order {
  enum class Kind : std::uint8_t { lex, grevlex, block };
  Kind kind = Kind::grevlex;
  int k = 0;

  static Order lex() { return {Kind::lex, 0}; }
  static Order grevlex() { return {Kind::grevlex, 0}; }
  static Order block(int k) { return {Kind::block, k}; }

  friend bool operator==(const Order& a, const Order& b) {
    return a.kind == b.kind && (a.kind != Kind::block || a.k == b.k);
  }
  friend bool operator!=(const Order& a, const Order& b) { return !(a == b); }

  std::string str() const {
    switch (kind) {
      case Kind::lex:
        return "lex";
      case Kind::grevlex:
        return "grevlex";
      default:
        return "block(" + std::to_string(k) + ")";
    }
  }
};

namespace detail {
inline int cmp_grevlex_span(const Mono& a, const Mono& b, int lo, int hi,
                            int dega, int degb) {
  if (dega != degb) return dega < degb ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    int d = a.exp(i) - b.exp(i);
    if (d != 0) return d > 0 ? -1 : 1;
  }
  return 0;
}
}  // namespace detail

/// Three-way comparison in the given order; positive when a > b.
inline int cmp_mono(const Mono& a, const Mono& b, const Order& ord,
                    int arity) {
  switch (ord.kind) {
    case Order::Kind::lex: {
      for (int i = 0; i < arity; ++i) {
        int d = a.exp(i) - b.exp(i);
        if (d != 0) return d > 0 ? 1 : -1;
      }
      return 0;
    }
    case Order::Kind::grevlex:
      return detail::cmp_grevlex_span(a, b, 0, arity, a.degree(), b.degree());
    case Order::Kind::block: {
      int da = 0, db = 0;
      for (int i = 0; i < ord.k; ++i) {
        da += a.exp(i);
        db += b.exp(i);
      }
      int c = detail::cmp_grevlex_span(a, b, 0, ord.k, da, db);
      if (c != 0) return c;
      return detail::cmp_grevlex_span(a, b, ord.k, arity, a.degree() - da,
                                      b.degree() - db);
    }
  }
  return 0;
}

}  // namespace cvxdual
