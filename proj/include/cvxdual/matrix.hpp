#pragma once

#include <cassert>
#include <utility>
#include <vector>

#include "cvxdual/common.hpp"
#include "cvxdual/fp.hpp"
#include "cvxdual/int.hpp"
#include "cvxdual/rat.hpp"
#include "cvxdual/upoly.hpp"

namespace cvxdual {

inline Rat div_exact(const Rat& a, const Rat& b) { return a / b; }
inline Fp div_exact(Fp a, Fp b) { return a / b; }

/// Dense matrix over an exact integral domain T.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() : rows_(0), cols_(0) {}
  DenseMatrix(int rows, int cols, T fill)
      : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& at(int i, int j) { return d_[static_cast<size_t>(i) * cols_ + j]; }
  const T& at(int i, int j) const {
    return d_[static_cast<size_t>(i) * cols_ + j];
  }

  DenseMatrix submatrix(const std::vector<int>& ri,
                        const std::vector<int>& ci) const {
    DenseMatrix s(static_cast<int>(ri.size()), static_cast<int>(ci.size()),
                  zero());
    for (size_t i = 0; i < ri.size(); ++i)
      for (size_t j = 0; j < ci.size(); ++j) s.at(i, j) = at(ri[i], ci[j]);
    return s;
  }

  /// Fraction-free determinant (Bareiss); all divisions are exact in T.
  T det() const {
    assert(rows_ == cols_);
    int n = rows_;
    if (n == 0) throw math_error("determinant of empty matrix");
    if (n == 1) return at(0, 0);
    if (n == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    DenseMatrix m = *this;
    T prev = zero();  // unused on the first elimination step
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
      if (m.at(k, k).is_zero()) {
        int p = -1;
        for (int i = k + 1; i < n; ++i)
          if (!m.at(i, k).is_zero()) {
            p = i;
            break;
          }
        if (p < 0) return zero();
        for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i) {
        for (int j = k + 1; j < n; ++j) {
          T t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
          m.at(i, j) = k == 0 ? std::move(t) : div_exact(t, prev);
        }
        m.at(i, k) = zero();
      }
      prev = m.at(k, k);
    }
    T r = m.at(n - 1, n - 1);
    return sign < 0 ? zero() - r : r;
  }

 private:
  T zero() const {
    if (!d_.empty()) return d_[0] - d_[0];
    return T();
  }

  int rows_, cols_;
  std::vector<T> d_;
};

namespace detail {
template <class T>
T one_from(const T& nonzero_sample) {
  return div_exact(nonzero_sample, nonzero_sample);
}

inline void combinations(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}
}  // namespace detail

/// All k x k minors, rows and columns in lexicographic combination order.
template <class T>
std::vector<T> minors(const DenseMatrix<T>& m, int k) {
  assert(k >= 1 && k <= m.rows() && k <= m.cols());
  std::vector<std::vector<int>> ri, ci;
  detail::combinations(m.rows(), k, ri);
  detail::combinations(m.cols(), k, ci);
  std::vector<T> out;
  out.reserve(ri.size() * ci.size());
  for (const auto& r : ri)
    for (const auto& c : ci) out.push_back(m.submatrix(r, c).det());
  return out;
}

/// Sylvester resultant of a = sum a[i] v^i and b = sum b[j] v^j with respect
/// to the implicit variable v; entries live in any exact domain T.
template <class T>
T sylvester_resultant(const std::vector<T>& a, const std::vector<T>& b) {
  int da = static_cast<int>(a.size()) - 1;
  int db = static_cast<int>(b.size()) - 1;
  if (da < 0 || db < 0) throw math_error("resultant of zero polynomial");
  assert(!a.back().is_zero() && !b.back().is_zero());
  if (da == 0 || db == 0)
    throw math_error("resultant of a constant polynomial");
  int n = da + db;
  // Rows hold ascending coefficient shifts, matching the stored
  // representation of the inputs.
  DenseMatrix<T> s(n, n, a[0] - a[0]);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) s.at(i, i + j) = a[j];
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) s.at(db + i, i + j) = b[j];
  return s.det();
}

/// Discriminant with the classical sign: (-1)^(d(d-1)/2) res(p, p') / lc(p).
template <class T>
T discriminant_from_coeffs(const std::vector<T>& p) {
  int d = static_cast<int>(p.size()) - 1;
  if (d < 2) throw math_error("discriminant needs degree >= 2");
  assert(!p.back().is_zero());
  std::vector<T> dp;
  dp.reserve(d);
  for (int i = 1; i <= d; ++i) {
    T acc = p[i];
    for (int k = 1; k < i; ++k) acc = acc + p[i];
    dp.push_back(std::move(acc));
  }
  while (dp.size() > 1 && dp.back().is_zero()) dp.pop_back();
  if (dp.back().is_zero()) throw math_error("discriminant: zero derivative");
  T res = sylvester_resultant(p, dp);
  T out = div_exact(res, p.back());
  if ((static_cast<long>(d) * (d - 1) / 2) % 2 == 1) out = (out - out) - out;
  return out;
}

inline Rat sylvester_resultant(const UPoly& a, const UPoly& b) {
  if (a.degree() < 1 || b.degree() < 1)
    throw math_error("resultant of a constant polynomial");
  return sylvester_resultant(a.coeffs(), b.coeffs());
}

inline Rat discriminant(const UPoly& p) {
  if (p.degree() < 2) throw math_error("discriminant needs degree >= 2");
  return discriminant_from_coeffs(p.coeffs());
}

}  // namespace cvxdual
