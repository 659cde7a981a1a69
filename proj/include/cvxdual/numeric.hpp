#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <utility>
#include <vector>

#include "cvxdual/common.hpp"

namespace cvxdual {

/// Dense row-major double matrix for the numeric layer.
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int rows, int cols) : r_(rows), c_(cols), d_(size_t(rows) * cols, 0.0) {}
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  double& at(int i, int j) { return d_[size_t(i) * c_ + j]; }
  double at(int i, int j) const { return d_[size_t(i) * c_ + j]; }

  Mat& operator+=(const Mat& o) {
    for (size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (size_t i = 0; i < d_.size(); ++i) d_[i] -= o.d_[i];
    return *this;
  }
  Mat& operator*=(double s) {
    for (auto& x : d_) x *= s;
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(double s, Mat a) { return a *= s; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    assert(a.c_ == b.r_);
    Mat r(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        double v = a.at(i, k);
        if (v == 0.0) continue;
        for (int j = 0; j < b.c_; ++j) r.at(i, j) += v * b.at(k, j);
      }
    return r;
  }

  Mat transposed() const {
    Mat t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  double max_abs() const {
    double m = 0;
    for (double x : d_) m = std::max(m, std::fabs(x));
    return m;
  }

  void symmetrize() {
    assert(r_ == c_);
    for (int i = 0; i < r_; ++i)
      for (int j = i + 1; j < c_; ++j)
        at(i, j) = at(j, i) = 0.5 * (at(i, j) + at(j, i));
  }

 private:
  int r_, c_;
  std::vector<double> d_;
};

inline double dot(const Mat& a, const Mat& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  double s = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += a.at(i, j) * b.at(i, j);
  return s;
}

/// Eigen-decomposition of a symmetric matrix by the cyclic Jacobi method.
/// Eigenvalues descend; columns of vectors match.
struct EigenSym {
  std::vector<double> values;
  Mat vectors;
};

inline EigenSym jacobi_eigen(Mat a) {
  assert(a.rows() == a.cols());
  int n = a.rows();
  Mat v = Mat::identity(n);
  double scale = a.max_abs();
  if (scale == 0) scale = 1;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a.at(i, j) * a.at(i, j);
    if (std::sqrt(off) <= 1e-15 * scale * n) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = a.at(p, q);
        if (std::fabs(apq) <= 1e-18 * scale) continue;
        double theta = (a.at(q, q) - a.at(p, p)) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1.0 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a.at(k, p), akq = a.at(k, q);
          a.at(k, p) = c * akp - s * akq;
          a.at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a.at(p, k), aqk = a.at(q, k);
          a.at(p, k) = c * apk - s * aqk;
          a.at(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v.at(k, p), vkq = v.at(k, q);
          v.at(k, p) = c * vkp - s * vkq;
          v.at(k, q) = s * vkp + c * vkq;
        }
      }
  }
  EigenSym e;
  e.values.resize(n);
  for (int i = 0; i < n; ++i) e.values[i] = a.at(i, i);
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int x, int y) { return e.values[x] < e.values[y]; });
  EigenSym out;
  out.values.resize(n);
  out.vectors = Mat(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = e.values[idx[j]];
    for (int i = 0; i < n; ++i) out.vectors.at(i, j) = v.at(i, idx[j]);
  }
  return out;
}

/// Number of eigenvalues above tau_rank = tol_scale * lambda_max (absolute
/// floor 1e-12 keeps the zero matrix at rank 0).
inline int numeric_rank(const EigenSym& e, double tol_scale = 1e-6) {
  if (e.values.empty()) return 0;
  double lmax = std::max(std::fabs(e.values.front()),
                         std::fabs(e.values.back()));
  double tau = std::max(tol_scale * lmax, 1e-12);
  int r = 0;
  for (double l : e.values)
    if (std::fabs(l) > tau) ++r;
  return r;
}

/// Cholesky factor L with A = L L^T; false when A is not positive definite.
inline bool cholesky(const Mat& a, Mat& l) {
  assert(a.rows() == a.cols());
  int n = a.rows();
  l = Mat(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = a.at(i, j);
      for (int k = 0; k < j; ++k) s -= l.at(i, k) * l.at(j, k);
      if (i == j) {
        if (s <= 0) return false;
        l.at(i, i) = std::sqrt(s);
      } else {
        l.at(i, j) = s / l.at(j, j);
      }
    }
  }
  return true;
}

/// Solves L y = b in place (lower triangular).
inline void solve_lower(const Mat& l, std::vector<double>& b) {
  int n = l.rows();
  for (int i = 0; i < n; ++i) {
    double s = b[i];
    for (int k = 0; k < i; ++k) s -= l.at(i, k) * b[k];
    b[i] = s / l.at(i, i);
  }
}

/// Solves L^T x = b in place.
inline void solve_upper_t(const Mat& l, std::vector<double>& b) {
  int n = l.rows();
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int k = i + 1; k < n; ++k) s -= l.at(k, i) * b[k];
    b[i] = s / l.at(i, i);
  }
}

/// Solves A X = B for symmetric positive definite A via Cholesky.
inline bool solve_spd(const Mat& a, Mat& x, const Mat& b) {
  Mat l;
  if (!cholesky(a, l)) return false;
  int n = a.rows(), m = b.cols();
  x = Mat(n, m);
  std::vector<double> col(n);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) col[i] = b.at(i, j);
    solve_lower(l, col);
    solve_upper_t(l, col);
    for (int i = 0; i < n; ++i) x.at(i, j) = col[i];
  }
  return true;
}

/// Inverse via Cholesky; requires positive definiteness.
inline Mat spd_inverse(const Mat& a) {
  Mat x;
  if (!solve_spd(a, x, Mat::identity(a.rows())))
    throw math_error("spd_inverse: matrix not positive definite");
  return x;
}

}  // namespace cvxdual
