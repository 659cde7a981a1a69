#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cvxdual/poly.hpp"

namespace cvxdual {

// ---------------------------------------------------------------------------
// Reduction budget: a per-call step cap that turns runaway computations into
// clean failures.  Each elementary cancellation in a reduction costs one step.
// ---------------------------------------------------------------------------

namespace budget {
inline thread_local std::uint64_t limit = 1000000;

/// Scoped override of the reduction budget.
class Guard {
 public:
  explicit Guard(std::uint64_t new_limit) : saved_(limit) { limit = new_limit; }
  ~Guard() { limit = saved_; }
  Guard(const Guard&) = delete;
  Guard& operator=(const Guard&) = delete;

 private:
  std::uint64_t saved_;
};
}  // namespace budget

/// Ideal: ring plus generator list (zero generators removed; an empty list is
/// the zero ideal).
template <class K>
struct IdealT {
  RingPtr<K> ring;
  std::vector<Polynomial<K>> gens;
};

template <class K>
IdealT<K> make_ideal(RingPtr<K> ring, std::vector<Polynomial<K>> gens) {
  IdealT<K> i;
  i.ring = std::move(ring);
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    g.check_compatible_ring(Polynomial<K>(i.ring));
    i.gens.push_back(std::move(g));
  }
  return i;
}

template <class K>
IdealT<K> ideal_sum(const IdealT<K>& a, const IdealT<K>& b) {
  std::vector<Polynomial<K>> g = a.gens;
  g.insert(g.end(), b.gens.begin(), b.gens.end());
  return make_ideal(a.ring, std::move(g));
}

using Ideal = IdealT<Rat>;
using IdealFp = IdealT<Fp>;

template <class K>
struct GroebnerBasisT {
  RingPtr<K> ring;
  Order ord;
  std::vector<Polynomial<K>> elems;  // reduced basis, monic, ascending LM
  std::uint64_t steps_used = 0;
};

using GroebnerBasis = GroebnerBasisT<Rat>;
using GroebnerBasisFp = GroebnerBasisT<Fp>;

// ---------------------------------------------------------------------------
// Core engine.  Runs over Int (fraction-free image of Q, content-stripped) or
// over a prime field (monic reduction).  CK selects the domain policy.
// ---------------------------------------------------------------------------

namespace gbdetail {

template <class CK>
struct Policy;

template <>
struct Policy<Int> {
  static void normalize(Polynomial<Int>& p) { p = primitive_part(p); }
  // alpha * lead(tail) - beta * lead(g) = 0 with the gcd removed.
  static void lead_pair(const Int& cg, const Int& ct, Int& alpha, Int& beta) {
    Int d = gcd(cg, ct);
    alpha = div_exact(cg, d);
    beta = div_exact(ct, d);
  }
  static bool alpha_is_one(const Int& a) { return a.is_one(); }
  static void fold_multiplier(Rat& mult, const Int& alpha) {
    mult = mult * Rat(alpha);
  }
};

template <>
struct Policy<Fp> {
  static void normalize(Polynomial<Fp>& p) { p = make_monic(p); }
  static void lead_pair(const Fp& cg, const Fp& ct, Fp& alpha, Fp& beta) {
    alpha = cg / cg;
    beta = ct / cg;
  }
  static bool alpha_is_one(const Fp&) { return true; }
  static void fold_multiplier(Rat&, const Fp&) {}
};

/// alpha * a[a_from..] - beta * x^m * b, merged in one pass; a, b sorted in
/// ord.
template <class CK>
std::vector<Term<CK>> combine(const CK& alpha, const std::vector<Term<CK>>& a,
                              size_t a_from, const CK& beta, const Mono& m,
                              const std::vector<Term<CK>>& b, const Order& ord,
                              int arity) {
  std::vector<Term<CK>> r;
  r.reserve(a.size() - a_from + b.size());
  bool a1 = Policy<CK>::alpha_is_one(alpha);
  size_t i = a_from, j = 0;
  while (i < a.size() || j < b.size()) {
    int cv;
    Mono mb;
    if (i == a.size()) {
      cv = -1;
      mb = b[j].m * m;
    } else if (j == b.size()) {
      cv = 1;
    } else {
      mb = b[j].m * m;
      cv = cmp_mono(a[i].m, mb, ord, arity);
    }
    if (cv > 0) {
      r.push_back({a[i].m, a1 ? a[i].c : a[i].c * alpha});
      ++i;
    } else if (cv < 0) {
      r.push_back({mb, -(beta * b[j].c)});
      ++j;
    } else {
      CK s = a1 ? a[i].c : a[i].c * alpha;
      s -= beta * b[j].c;
      if (!s.is_zero()) r.push_back({a[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

inline void strip_content(std::vector<Term<Int>>& t, size_t from, Rat& mult) {
  Int g(0);
  for (size_t i = from; i < t.size(); ++i) {
    g = gcd(g, t[i].c);
    if (g.is_one()) return;
  }
  if (g.is_zero() || g.is_one()) return;
  for (size_t i = from; i < t.size(); ++i) t[i].c = div_exact(t[i].c, g);
  mult = mult / Rat(g);
}
inline void strip_content(std::vector<Term<Fp>>&, size_t, Rat&) {}

/// One finalized (irreducible) term: value = c / m_at.
template <class CK>
struct DoneTerm {
  Mono m;
  CK c;
  Rat m_at;
};

/// Full reduction of tail against the basis.  Returns irreducible terms with
/// their exact rational multipliers (value of term i is c_i / m_at_i; for a
/// prime field m_at is always 1 and the coefficient is exact).
template <class CK>
std::vector<DoneTerm<CK>> reduce_full(std::vector<Term<CK>> tail,
                                      const std::vector<Polynomial<CK>>& g,
                                      const std::vector<Mono>& lm,
                                      const std::vector<char>& usable,
                                      const Order& ord, int arity,
                                      std::uint64_t& steps) {
  std::vector<DoneTerm<CK>> done;
  Rat mult(1);
  int since_strip = 0;
  size_t pos = 0;
  while (pos < tail.size()) {
    const Mono t = tail[pos].m;
    int best = -1;
    size_t best_size = 0;
    for (size_t k = 0; k < g.size(); ++k) {
      if (usable[k] == 0) continue;
      if (!lm[k].divides(t)) continue;
      size_t sz = g[k].num_terms();
      if (best < 0 || sz < best_size) {
        best = static_cast<int>(k);
        best_size = sz;
      }
    }
    if (best < 0) {
      done.push_back({tail[pos].m, tail[pos].c, mult});
      ++pos;
      continue;
    }
    if (++steps > budget::limit) throw budget_exhausted(budget::limit);
    const auto& red = g[best];
    CK alpha = tail[pos].c, beta = tail[pos].c;
    Policy<CK>::lead_pair(red.leading_coeff(), tail[pos].c, alpha, beta);
    Mono q = t / lm[best];
    tail = combine(alpha, tail, pos, beta, q, red.terms(), ord, arity);
    pos = 0;
    assert(tail.empty() || cmp_mono(tail.front().m, t, ord, arity) < 0);
    if (!Policy<CK>::alpha_is_one(alpha))
      Policy<CK>::fold_multiplier(mult, alpha);
    if (++since_strip >= 16) {
      strip_content(tail, pos, mult);
      since_strip = 0;
    }
  }
  return done;
}

/// Collapses reduce_full output to a single polynomial up to scaling
/// (primitive for Int, monic for Fp).
inline Polynomial<Int> collapse_scaled(const std::vector<DoneTerm<Int>>& done,
                                       const RingPtr<Int>& ring,
                                       const Order& ord) {
  // value_i = c_i / m_at_i; clearing the multipliers jointly needs the lcm
  // of their numerators.
  Int num_lcm(1);
  for (const auto& d : done) num_lcm = lcm(num_lcm, d.m_at.num());
  std::vector<Term<Int>> ts;
  ts.reserve(done.size());
  for (const auto& d : done) {
    Rat v = Rat(d.c) / d.m_at * Rat(num_lcm);
    assert(v.is_integer());
    if (!v.num().is_zero()) ts.push_back({d.m, v.num()});
  }
  auto p = Polynomial<Int>::from_sorted_terms(ring, ord, std::move(ts));
  return primitive_part(p);
}
inline Polynomial<Fp> collapse_scaled(const std::vector<DoneTerm<Fp>>& done,
                                      const RingPtr<Fp>& ring,
                                      const Order& ord) {
  std::vector<Term<Fp>> ts;
  ts.reserve(done.size());
  for (const auto& d : done) ts.push_back({d.m, d.c});
  return make_monic(
      Polynomial<Fp>::from_sorted_terms(ring, ord, std::move(ts)));
}

/// Exact rational normal form from reduce_full output of a lambda-scaled
/// input: NF = sum c_i / (m_at_i * lambda).
inline Polynomial<Rat> collapse_exact(const std::vector<DoneTerm<Int>>& done,
                                      const Rat& lambda,
                                      const RingPtr<Rat>& ring,
                                      const Order& ord) {
  std::vector<Term<Rat>> ts;
  ts.reserve(done.size());
  for (const auto& d : done) ts.push_back({d.m, Rat(d.c) / (d.m_at * lambda)});
  return Polynomial<Rat>::from_sorted_terms(ring, ord, std::move(ts));
}

struct PairKey {
  int deg;
  Mono l;
  int i, j;
};

template <class CK>
class Engine {
 public:
  Engine(RingPtr<CK> ring, Order ord)
      : ring_(std::move(ring)), ord_(ord), ar_(ring_->arity()) {}

  void add_input(Polynomial<CK> p) {
    p = p.resorted(ord_);
    Policy<CK>::normalize(p);
    if (!p.is_zero()) inputs_.push_back(std::move(p));
  }

  void run() {
    // Deterministic start: smaller leading monomials first.
    std::stable_sort(inputs_.begin(), inputs_.end(),
                     [&](const Polynomial<CK>& a, const Polynomial<CK>& b) {
                       int c = cmp_mono(a.leading_mono(), b.leading_mono(),
                                        ord_, ar_);
                       if (c != 0) return c < 0;
                       return a.num_terms() < b.num_terms();
                     });
    for (auto& p : inputs_) insert_reduced(std::move(p));
    inputs_.clear();
    while (!queue_.empty()) {
      PairKey pk = *queue_.begin();
      queue_.erase(queue_.begin());
      pending_.erase({pk.i, pk.j});
      if (trivially_unneeded(pk)) continue;
      process_pair(pk);
    }
    finalize();
  }

  std::vector<Polynomial<CK>> take_basis() { return std::move(g_); }
  std::uint64_t steps() const { return steps_; }

  /// Reduces p fully against the final basis; exact up to scaling data.
  std::vector<DoneTerm<CK>> reduce(const Polynomial<CK>& p) {
    std::vector<Term<CK>> tail(p.resorted(ord_).terms());
    return reduce_full(tail, g_, lm_, usable_, ord_, ar_, steps_);
  }

 private:
  struct KeyLess {
    const Engine* e;
    bool operator()(const PairKey& a, const PairKey& b) const {
      if (a.deg != b.deg) return a.deg < b.deg;
      int c = cmp_mono(a.l, b.l, e->ord_, e->ar_);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  void insert_reduced(Polynomial<CK> p) {
    std::vector<Term<CK>> tail(p.terms());
    auto done = reduce_full(tail, g_, lm_, usable_, ord_, ar_, steps_);
    auto h = collapse_scaled(done, ring_, ord_);
    if (h.is_zero()) return;
    append_element(std::move(h));
  }

  void append_element(Polynomial<CK> h) {
    int t = static_cast<int>(g_.size());
    Mono hm = h.leading_mono();
    g_.push_back(std::move(h));
    lm_.push_back(hm);
    usable_.push_back(1);
    minimal_.push_back(1);
    for (int i = 0; i < t; ++i) {
      PairKey pk;
      pk.l = lcm(lm_[i], hm);
      pk.deg = pk.l.degree();
      pk.i = i;
      pk.j = t;
      queue_.insert(pk);
      pending_.insert({i, t});
    }
    for (int i = 0; i < t; ++i)
      if (minimal_[i] && hm.divides(lm_[i])) minimal_[i] = 0;
  }

  bool trivially_unneeded(const PairKey& pk) {
    // Coprime leading monomials: S-pair reduces to zero.
    if (coprime(lm_[pk.i], lm_[pk.j])) return true;
    // Chain criterion: a third element divides the lcm and both side pairs
    // are already handled.
    for (size_t k = 0; k < g_.size(); ++k) {
      int ki = static_cast<int>(k);
      if (ki == pk.i || ki == pk.j) continue;
      if (!lm_[k].divides(pk.l)) continue;
      auto key = [&](int a, int b) {
        return std::pair<int, int>(std::min(a, b), std::max(a, b));
      };
      if (pending_.count(key(pk.i, ki)) == 0 &&
          pending_.count(key(pk.j, ki)) == 0)
        return true;
    }
    return false;
  }

  void process_pair(const PairKey& pk) {
    const auto& f = g_[pk.i];
    const auto& h = g_[pk.j];
    // S = alpha * (l/lm_i) * f - beta * (l/lm_j) * h with
    // alpha * lc(f) = beta * lc(h); lead_pair(lc(h), lc(f)) delivers exactly
    // that pair.
    CK alpha = f.leading_coeff(), beta = h.leading_coeff();
    Policy<CK>::lead_pair(h.leading_coeff(), f.leading_coeff(), alpha, beta);
    Mono mf = pk.l / lm_[pk.i];
    Mono mh = pk.l / lm_[pk.j];
    std::vector<Term<CK>> left;
    left.reserve(f.num_terms());
    bool a1 = Policy<CK>::alpha_is_one(alpha);
    for (const auto& t : f.terms())
      left.push_back({t.m * mf, a1 ? t.c : t.c * alpha});
    CK one = ring_->one();
    auto s = combine(one, left, 0, beta, mh, h.terms(), ord_, ar_);
    if (s.empty()) return;
    auto sp = Polynomial<CK>::from_sorted_terms(ring_, ord_, std::move(s));
    Policy<CK>::normalize(sp);
    insert_reduced(std::move(sp));
  }

  void finalize() {
    // Minimal basis: drop elements whose head is divisible by another head.
    std::vector<int> keep;
    for (size_t i = 0; i < g_.size(); ++i)
      if (minimal_[i]) keep.push_back(static_cast<int>(i));
    std::sort(keep.begin(), keep.end(), [&](int a, int b) {
      return cmp_mono(lm_[a], lm_[b], ord_, ar_) < 0;
    });
    std::vector<Polynomial<CK>> out;
    std::vector<Mono> outlm;
    for (int i : keep) {
      out.push_back(std::move(g_[i]));
      outlm.push_back(lm_[i]);
    }
    // Tail-reduce every element against the others.
    std::vector<char> mask(out.size(), 1);
    for (size_t i = 0; i < out.size(); ++i) {
      mask[i] = 0;
      std::vector<Term<CK>> tail(out[i].terms());
      auto done = reduce_full(tail, out, outlm, mask, ord_, ar_, steps_);
      out[i] = collapse_scaled(done, ring_, ord_);
      assert(!out[i].is_zero());
      mask[i] = 1;
    }
    g_ = std::move(out);
    lm_ = std::move(outlm);
    usable_.assign(g_.size(), 1);
    minimal_.assign(g_.size(), 1);
  }

  RingPtr<CK> ring_;
  Order ord_;
  int ar_;
  std::vector<Polynomial<CK>> inputs_;
  std::vector<Polynomial<CK>> g_;
  std::vector<Mono> lm_;
  std::vector<char> usable_;   // participates in reductions
  std::vector<char> minimal_;  // head not divisible by another head
  std::set<PairKey, KeyLess> queue_{KeyLess{this}};
  std::set<std::pair<int, int>> pending_;
  std::uint64_t steps_ = 0;
};

// Domain bridging: Rat ideals run on an Int engine; Fp ideals run natively.

struct RatBridge {
  RingPtr<Rat> rat_ring;
  RingPtr<Int> int_ring;

  explicit RatBridge(const RingPtr<Rat>& r)
      : rat_ring(r), int_ring(make_int_ring(r->names())) {}

  Polynomial<Int> in(const Polynomial<Rat>& p) const {
    return primitive_part(clear_denominators(p, int_ring));
  }
  Polynomial<Rat> out(const Polynomial<Int>& p) const {
    return make_monic(to_rat_poly(p, rat_ring));
  }
};

}  // namespace gbdetail

// ---------------------------------------------------------------------------
// Public operations.
// ---------------------------------------------------------------------------

inline GroebnerBasis buchberger(const Ideal& i, Order ord = Order::grevlex()) {
  gbdetail::RatBridge br(i.ring);
  gbdetail::Engine<Int> eng(br.int_ring, ord);
  for (const auto& g : i.gens) eng.add_input(br.in(g));
  eng.run();
  GroebnerBasis gb;
  gb.ring = i.ring;
  gb.ord = ord;
  gb.steps_used = eng.steps();
  for (auto& e : eng.take_basis()) gb.elems.push_back(br.out(e));
  return gb;
}

inline GroebnerBasisFp buchberger(const IdealFp& i,
                                  Order ord = Order::grevlex()) {
  gbdetail::Engine<Fp> eng(i.ring, ord);
  for (const auto& g : i.gens) eng.add_input(g);
  eng.run();
  GroebnerBasisFp gb;
  gb.ring = i.ring;
  gb.ord = ord;
  gb.steps_used = eng.steps();
  gb.elems = eng.take_basis();
  return gb;
}

inline Polynomial<Rat> normal_form(const Polynomial<Rat>& p,
                                   const GroebnerBasis& gb) {
  p.check_compatible_ring(Polynomial<Rat>(gb.ring));
  if (p.is_zero()) return Polynomial<Rat>(gb.ring, gb.ord);
  gbdetail::RatBridge br(gb.ring);
  std::vector<Polynomial<Int>> basis;
  std::vector<Mono> lms;
  for (const auto& e : gb.elems) {
    basis.push_back(br.in(e.resorted(gb.ord)));
    lms.push_back(basis.back().leading_mono());
  }
  // Clear denominators of p: pin = lambda * p exactly.
  Polynomial<Rat> ps = p.resorted(gb.ord);
  Polynomial<Int> pin = clear_denominators(ps, br.int_ring);
  Rat lambda = Rat(pin.leading_coeff()) / ps.leading_coeff();
  std::vector<char> usable(basis.size(), 1);
  std::uint64_t steps = 0;
  std::vector<Term<Int>> tail(pin.terms());
  auto done = gbdetail::reduce_full(tail, basis, lms, usable, gb.ord,
                                    gb.ring->arity(), steps);
  return gbdetail::collapse_exact(done, lambda, gb.ring, gb.ord);
}

inline Polynomial<Fp> normal_form(const Polynomial<Fp>& p,
                                  const GroebnerBasisFp& gb) {
  p.check_compatible_ring(Polynomial<Fp>(gb.ring));
  std::vector<Mono> lms;
  for (const auto& e : gb.elems) lms.push_back(
      e.resorted(gb.ord).leading_mono());
  std::vector<Polynomial<Fp>> basis;
  for (const auto& e : gb.elems) basis.push_back(e.resorted(gb.ord));
  std::vector<char> usable(basis.size(), 1);
  std::uint64_t steps = 0;
  std::vector<Term<Fp>> tail(p.resorted(gb.ord).terms());
  auto done = gbdetail::reduce_full(tail, basis, lms, usable, gb.ord,
                                    gb.ring->arity(), steps);
  std::vector<Term<Fp>> ts;
  for (const auto& d : done) ts.push_back({d.m, d.c});
  return Polynomial<Fp>::from_sorted_terms(gb.ring, gb.ord, std::move(ts));
}

template <class K>
bool ideal_contains(const GroebnerBasisT<K>& gb, const Polynomial<K>& p) {
  return normal_form(p, gb).is_zero();
}

template <class K>
bool ideal_equal(const IdealT<K>& a, const IdealT<K>& b) {
  auto ga = buchberger(a);
  auto gb = buchberger(b);
  for (const auto& g : b.gens)
    if (!ideal_contains(ga, g)) return false;
  for (const auto& g : a.gens)
    if (!ideal_contains(gb, g)) return false;
  return true;
}

namespace gbdetail {

/// Shared elimination skeleton: permute drop-vars first, run a block GB,
/// keep drop-free elements (mapped back to the original ring).
template <class K, class RunCore>
IdealT<K> eliminate_impl(const IdealT<K>& i, const std::vector<int>& drop_idx,
                         RunCore run_core) {
  const auto& r = *i.ring;
  int n = r.arity();
  std::vector<char> dropped(n, 0);
  for (int d : drop_idx) {
    assert(d >= 0 && d < n);
    dropped[d] = 1;
  }
  int k = static_cast<int>(drop_idx.size());
  std::vector<std::string> perm_names;
  std::vector<int> old_to_new(n, -1);
  for (int v = 0; v < n; ++v)
    if (dropped[v]) {
      old_to_new[v] = static_cast<int>(perm_names.size());
      perm_names.push_back(r.name(v));
    }
  for (int v = 0; v < n; ++v)
    if (!dropped[v]) {
      old_to_new[v] = static_cast<int>(perm_names.size());
      perm_names.push_back(r.name(v));
    }
  std::vector<int> new_to_old(n);
  for (int v = 0; v < n; ++v) new_to_old[old_to_new[v]] = v;
  return run_core(perm_names, old_to_new, new_to_old, k);
}

inline bool free_of_first(const Mono& m, int k) {
  for (int v = 0; v < k; ++v)
    if (m.exp(v) > 0) return false;
  return true;
}

}  // namespace gbdetail

/// I ∩ K[vars \ drop] via a block(|drop|) Groebner basis.
inline Ideal eliminate(const Ideal& i, const std::vector<int>& drop_idx) {
  return gbdetail::eliminate_impl(
      i, drop_idx,
      [&](const std::vector<std::string>& perm_names,
          const std::vector<int>& old_to_new,
          const std::vector<int>& new_to_old, int k) {
        auto perm_ring = make_int_ring(perm_names);
        gbdetail::RatBridge br(i.ring);
        gbdetail::Engine<Int> eng(perm_ring, Order::block(k));
        for (const auto& g : i.gens)
          eng.add_input(map_to_ring(br.in(g), perm_ring, old_to_new));
        eng.run();
        std::vector<Polynomial<Rat>> out;
        auto int_orig = br.int_ring;
        for (auto& e : eng.take_basis()) {
          if (!gbdetail::free_of_first(e.leading_mono(), k)) continue;
          out.push_back(br.out(map_to_ring(e, int_orig, new_to_old))
                            .resorted(Order::grevlex()));
        }
        return make_ideal(i.ring, std::move(out));
      });
}

inline IdealFp eliminate(const IdealFp& i, const std::vector<int>& drop_idx) {
  return gbdetail::eliminate_impl(
      i, drop_idx,
      [&](const std::vector<std::string>& perm_names,
          const std::vector<int>& old_to_new,
          const std::vector<int>& new_to_old, int k) {
        auto perm_ring = std::make_shared<const Ring<Fp>>(perm_names,
                                                          i.ring->one());
        gbdetail::Engine<Fp> eng(perm_ring, Order::block(k));
        for (const auto& g : i.gens)
          eng.add_input(map_to_ring(g, perm_ring, old_to_new));
        eng.run();
        std::vector<Polynomial<Fp>> out;
        for (auto& e : eng.take_basis()) {
          if (!gbdetail::free_of_first(e.leading_mono(), k)) continue;
          out.push_back(
              map_to_ring(e, i.ring, new_to_old).resorted(Order::grevlex()));
        }
        return make_ideal(i.ring, std::move(out));
      });
}

template <class K>
IdealT<K> eliminate(const IdealT<K>& i, const std::vector<std::string>& drop) {
  std::vector<int> idx;
  for (const auto& v : drop) {
    int d = i.ring->index_of(v);
    if (d < 0) throw math_error("eliminate: unknown variable " + v);
    idx.push_back(d);
  }
  return eliminate(i, idx);
}

namespace gbdetail {
inline std::string fresh_var_name(const std::vector<std::string>& names,
                                  std::string base) {
  for (;;) {
    bool clash = false;
    for (const auto& n : names)
      if (n == base) {
        clash = true;
        break;
      }
    if (!clash) return base;
    base += "_";
  }
}

template <class K>
RingPtr<K> extended_ring(const Ring<K>& r, const std::string& extra) {
  auto names = r.names();
  names.insert(names.begin(), extra);
  return std::make_shared<const Ring<K>>(std::move(names), r.one());
}
}  // namespace gbdetail

/// Saturation (I : g^infinity) via the auxiliary-variable construction.
template <class K>
IdealT<K> saturate(const IdealT<K>& i, const Polynomial<K>& g) {
  if (g.is_zero()) throw math_error("saturate by zero polynomial");
  std::string tname =
      gbdetail::fresh_var_name(i.ring->names(), "t_sat");
  auto r2 = gbdetail::extended_ring(*i.ring, tname);
  std::vector<int> old_to_new(i.ring->arity());
  for (int v = 0; v < i.ring->arity(); ++v) old_to_new[v] = v + 1;
  std::vector<Polynomial<K>> gens2;
  for (const auto& p : i.gens)
    gens2.push_back(map_to_ring(p, r2, old_to_new));
  auto t = Polynomial<K>::variable(r2, 0);
  auto one = Polynomial<K>::constant(r2, r2->one());
  gens2.push_back(one - t * map_to_ring(g, r2, old_to_new));
  auto j2 = make_ideal(r2, std::move(gens2));
  auto elim = eliminate(j2, std::vector<int>{0});
  std::vector<int> back(r2->arity(), -1);
  for (int v = 1; v < r2->arity(); ++v) back[v] = v - 1;
  std::vector<Polynomial<K>> out;
  for (const auto& p : elim.gens)
    out.push_back(map_to_ring(p, i.ring, back));
  return make_ideal(i.ring, std::move(out));
}

/// Ideal intersection via the auxiliary-variable construction:
/// a ∩ b = (t·a + (1-t)·b) ∩ K[vars].
template <class K>
IdealT<K> ideal_intersect(const IdealT<K>& a, const IdealT<K>& b) {
  if (a.ring.get() != b.ring.get() && !a.ring->same_as(*b.ring))
    throw math_error("ideal_intersect: ring mismatch");
  if (a.gens.empty() || b.gens.empty()) return make_ideal(a.ring, {});
  std::string tname = gbdetail::fresh_var_name(a.ring->names(), "t_cap");
  auto r2 = gbdetail::extended_ring(*a.ring, tname);
  std::vector<int> old_to_new(a.ring->arity());
  for (int v = 0; v < a.ring->arity(); ++v) old_to_new[v] = v + 1;
  auto t = Polynomial<K>::variable(r2, 0);
  auto s = Polynomial<K>::constant(r2, r2->one()) - t;
  std::vector<Polynomial<K>> gens2;
  gens2.reserve(a.gens.size() + b.gens.size());
  for (const auto& p : a.gens) gens2.push_back(t * map_to_ring(p, r2, old_to_new));
  for (const auto& p : b.gens) gens2.push_back(s * map_to_ring(p, r2, old_to_new));
  auto elim = eliminate(make_ideal(r2, std::move(gens2)), std::vector<int>{0});
  std::vector<int> back(r2->arity(), -1);
  for (int v = 1; v < r2->arity(); ++v) back[v] = v - 1;
  std::vector<Polynomial<K>> out;
  out.reserve(elim.gens.size());
  for (const auto& p : elim.gens) out.push_back(map_to_ring(p, a.ring, back));
  return make_ideal(a.ring, std::move(out));
}

/// Saturation by an ideal: I : J^∞ = ∩_g (I : g^∞) over the generators of J,
/// iterated generator-wise until stable (stability tested by reduction).
template <class K>
IdealT<K> saturate(const IdealT<K>& i, const IdealT<K>& j) {
  std::vector<Polynomial<K>> gens;
  for (const auto& g : j.gens)
    if (!g.is_zero()) gens.push_back(g);
  if (gens.empty()) throw math_error("saturate by zero ideal");
  IdealT<K> cur = i;
  for (;;) {
    auto gb = buchberger(cur);
    cur = make_ideal(cur.ring, gb.elems);
    std::vector<IdealT<K>> parts;
    parts.reserve(gens.size());
    for (const auto& g : gens) parts.push_back(saturate(cur, g));
    IdealT<K> next = std::move(parts[0]);
    for (size_t k = 1; k < parts.size(); ++k)
      next = ideal_intersect(next, parts[k]);
    // A generator-wise pass only grows the ideal, so the iteration is stable
    // exactly when every generator of the pass reduces into cur.
    bool stable = true;
    for (const auto& p : next.gens)
      if (!ideal_contains(gb, p)) {
        stable = false;
        break;
      }
    if (stable) return cur;
    cur = std::move(next);
  }
}

// ---------------------------------------------------------------------------
// Dimension and degree.
// ---------------------------------------------------------------------------

namespace gbdetail {

inline bool some_lm_supported_in(const std::vector<Mono>& lms,
                                 const std::vector<char>& in_set, int arity) {
  for (const auto& m : lms) {
    bool inside = true;
    for (int v = 0; v < arity && inside; ++v)
      if (m.exp(v) > 0 && !in_set[v]) inside = false;
    if (inside) return true;
  }
  return false;
}

inline int max_independent(const std::vector<Mono>& lms, int arity) {
  // Largest S with no leading monomial supported inside S.
  std::vector<char> in_set(arity, 0);
  int best = 0;
  // Depth-first over variables with simple bound pruning.
  std::function<void(int, int)> rec = [&](int v, int size) {
    best = std::max(best, size);
    if (v == arity || size + (arity - v) <= best) return;
    in_set[v] = 1;
    if (!some_lm_supported_in(lms, in_set, arity)) rec(v + 1, size + 1);
    in_set[v] = 0;
    rec(v + 1, size);
  };
  rec(0, 0);
  return best;
}

}  // namespace gbdetail

/// Krull dimension of R/I (affine); -1 for the unit ideal.  With
/// projective=true returns affine dimension - 1 (homogeneous input).
template <class K>
int ideal_dimension(const IdealT<K>& i, bool projective = false,
                    Order ord = Order::grevlex()) {
  auto gb = buchberger(i, ord);
  std::vector<Mono> lms;
  for (const auto& e : gb.elems) {
    if (e.is_constant()) return -1;  // unit ideal sentinel
    lms.push_back(e.resorted(ord).leading_mono());
  }
  int dim = lms.empty() ? i.ring->arity()
                        : gbdetail::max_independent(lms, i.ring->arity());
  return projective ? dim - 1 : dim;
}

/// Number of standard monomials (= solution count with multiplicity) of a
/// zero-dimensional ideal.
template <class K>
long quotient_degree(const IdealT<K>& i, Order ord = Order::grevlex()) {
  auto gb = buchberger(i, ord);
  int n = i.ring->arity();
  std::vector<Mono> lms;
  for (const auto& e : gb.elems) {
    if (e.is_constant()) return 0;  // unit ideal: no solutions
    lms.push_back(e.resorted(ord).leading_mono());
  }
  // Zero-dimensionality: every variable has a pure-power leading term.
  std::vector<int> cap(n, -1);
  for (const auto& m : lms) {
    int support = -1;
    bool pure = true;
    for (int v = 0; v < n; ++v)
      if (m.exp(v) > 0) {
        if (support >= 0) pure = false;
        support = v;
      }
    if (pure && support >= 0)
      cap[support] = cap[support] < 0 ? m.exp(support)
                                      : std::min(cap[support], m.exp(support));
  }
  for (int v = 0; v < n; ++v)
    if (cap[v] < 0)
      throw math_error("quotient_degree: ideal is not zero-dimensional (no "
                       "pure power of " +
                       i.ring->name(v) + " in the leading-term ideal)");
  long count = 0;
  Mono cur = Mono::one();
  std::function<void(int)> rec = [&](int v) {
    // Prune when some leading monomial with support in the assigned prefix
    // divides the current partial monomial.
    for (const auto& m : lms) {
      bool applies = true;
      for (int w = 0; w < n && applies; ++w) {
        if (w < v) {
          if (m.exp(w) > cur.exp(w)) applies = false;
        } else if (m.exp(w) > 0) {
          applies = false;
        }
      }
      if (applies) return;
    }
    if (v == n) {
      ++count;
      return;
    }
    for (int e = 0; e < cap[v]; ++e) {
      cur.set_exp(v, e);
      rec(v + 1);
    }
    cur.set_exp(v, 0);
  };
  rec(0);
  return count;
}

}  // namespace cvxdual
