#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nsl {

// Dense matrix over an exact field type (Rational, QuadExt).
template <class T>
class Mat {
public:
  Mat() : r_(0), c_(0) {}
  Mat(std::size_t r, std::size_t c) : r_(r), c_(c), d_(r * c) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }

  T& at(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

  Mat transpose() const {
    Mat m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    check_same(a, b);
    Mat m(a.r_, a.c_);
    for (std::size_t k = 0; k < a.d_.size(); ++k) m.d_[k] = a.d_[k] + b.d_[k];
    return m;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    check_same(a, b);
    Mat m(a.r_, a.c_);
    for (std::size_t k = 0; k < a.d_.size(); ++k) m.d_[k] = a.d_[k] - b.d_[k];
    return m;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("Mat: dimension mismatch");
    Mat m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        if (a.at(i, k) == T(0)) continue;
        for (std::size_t j = 0; j < b.c_; ++j)
          m.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return m;
  }
  friend Mat operator*(const T& s, const Mat& a) {
    Mat m(a.r_, a.c_);
    for (std::size_t k = 0; k < a.d_.size(); ++k) m.d_[k] = s * a.d_[k];
    return m;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
  }

  bool is_zero() const {
    for (const auto& v : d_)
      if (!(v == T(0))) return false;
    return true;
  }

private:
  static void check_same(const Mat& a, const Mat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("Mat: dimension mismatch");
  }
  std::size_t r_, c_;
  std::vector<T> d_;
};

template <class T>
struct RrefResult {
  Mat<T> R;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
  std::size_t rank = 0;
};

// Reduced row echelon form by exact Gauss-Jordan elimination; pivot choice is
// the first nonzero entry in the column, so the result is deterministic.
template <class T>
RrefResult<T> rref(Mat<T> m) {
  RrefResult<T> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col) == T(0)) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    T inv = T(1) / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = inv * m.at(row, j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == T(0)) continue;
      T f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.R = std::move(m);
  return out;
}

template <class T>
std::size_t rank(const Mat<T>& m) {
  return rref(m).rank;
}

// Basis of the right kernel; one vector per free column, in ascending column
// order, rescaled so the first nonzero coordinate is 1.
template <class T>
std::vector<std::vector<T>> kernel(const Mat<T>& m) {
  RrefResult<T> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = T(0) - e.R.at(r, free);
    for (auto& x : v)
      if (!(x == T(0))) {
        T inv = T(1) / x;
        for (auto& y : v) y = inv * y;
        break;
      }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
T det(Mat<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: square matrix required");
  T d(1);
  std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m.at(p, col) == T(0)) ++p;
    if (p == n) return T(0);
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
      d = T(0) - d;
    }
    d = d * m.at(col, col);
    T inv = T(1) / m.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m.at(i, col) == T(0)) continue;
      T f = inv * m.at(i, col);
      for (std::size_t j = col; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
    }
  }
  return d;
}

template <class T>
std::optional<Mat<T>> inverse(const Mat<T>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: square matrix required");
  std::size_t n = a.rows();
  Mat<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = T(1);
  }
  RrefResult<T> e = rref(std::move(aug));
  if (e.rank < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Mat<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = e.R.at(i, n + j);
  return inv;
}

struct LinearSolveResult {
  bool consistent = false;
  bool unique = false;
};

// Solves A x = b; free variables are set to zero.
template <class T>
LinearSolveResult solve_linear(const Mat<T>& a, const std::vector<T>& b, std::vector<T>& x) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: size mismatch");
  Mat<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  RrefResult<T> e = rref(std::move(aug));
  LinearSolveResult res;
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    if (e.pivots[r] == a.cols()) return res;  // row (0 ... 0 | 1): inconsistent
  res.consistent = true;
  res.unique = e.rank == a.cols();
  x.assign(a.cols(), T(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.R.at(r, a.cols());
  return res;
}

}  // namespace nsl
