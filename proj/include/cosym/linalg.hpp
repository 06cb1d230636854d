#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cosym/scalar.hpp"

namespace cosym {

/// Fixed-length column vector over a scalar type. Immutable length, mutable
/// entries during construction; treated as a value everywhere.
template <ScalarType S>
class Vec {
 public:
  explicit Vec(std::size_t dim) : c_(dim, S(0)) {
    if (dim == 0) throw std::invalid_argument("Vec: dimension must be positive");
  }
  Vec(std::initializer_list<S> init) : c_(init) {
    if (c_.empty()) throw std::invalid_argument("Vec: dimension must be positive");
  }
  explicit Vec(std::vector<S> entries) : c_(std::move(entries)) {
    if (c_.empty()) throw std::invalid_argument("Vec: dimension must be positive");
  }

  std::size_t dim() const { return c_.size(); }
  const S& operator[](std::size_t i) const { return c_.at(i); }
  S& operator[](std::size_t i) { return c_.at(i); }
  const std::vector<S>& entries() const { return c_; }

  bool is_zero() const {
    for (const S& x : c_)
      if (!scalar_traits<S>::is_zero(x)) return false;
    return true;
  }

  friend Vec operator+(const Vec& a, const Vec& b) {
    check_same_dim(a, b, "operator+");
    Vec r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
  }
  friend Vec operator-(const Vec& a, const Vec& b) {
    check_same_dim(a, b, "operator-");
    Vec r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
  }
  friend Vec operator*(const S& s, const Vec& a) {
    Vec r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = s * a[i];
    return r;
  }
  friend Vec operator-(const Vec& a) { return S(-1) * a; }

  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!scalar_traits<S>::equal(a[i], b[i])) return false;
    return true;
  }

 private:
  static void check_same_dim(const Vec& a, const Vec& b, const char* op) {
    if (a.dim() != b.dim())
      throw std::invalid_argument(std::string("Vec::") + op + ": dimension mismatch");
  }
  std::vector<S> c_;
};

/// Dense matrix, row major. Rows and columns are both at least one.
template <ScalarType S>
class Mat {
 public:
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), c_(rows * cols, S(0)) {
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("Mat: rows and cols must be positive");
  }
  Mat(std::initializer_list<std::initializer_list<S>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0)
      throw std::invalid_argument("Mat: rows and cols must be positive");
    c_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_)
        throw std::invalid_argument("Mat: ragged initializer");
      for (const S& x : row) c_.push_back(x);
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  /// Stack the given vectors as rows.
  static Mat from_rows(std::span<const Vec<S>> rows) {
    if (rows.empty()) throw std::invalid_argument("Mat::from_rows: no rows");
    Mat m(rows.size(), rows.front().dim());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].dim() != m.cols())
        throw std::invalid_argument("Mat::from_rows: ragged input");
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const S& operator()(std::size_t i, std::size_t j) const { return c_.at(i * cols_ + j); }
  S& operator()(std::size_t i, std::size_t j) { return c_.at(i * cols_ + j); }

  Vec<S> row(std::size_t i) const {
    Vec<S> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  Vec<S> col(std::size_t j) const {
    Vec<S> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
    return r;
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    check_same_shape(a, b, "operator+");
    Mat r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    check_same_shape(a, b, "operator-");
    Mat r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }
  friend Mat operator*(const S& s, const Mat& a) {
    Mat r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = s * a.c_[k];
    return r;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("Mat::operator*: inner dimension mismatch");
    Mat r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (scalar_traits<S>::is_exact && scalar_traits<S>::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
      }
    return r;
  }
  friend Vec<S> operator*(const Mat& a, const Vec<S>& v) {
    if (a.cols_ != v.dim())
      throw std::invalid_argument("Mat::operator*: vector dimension mismatch");
    Vec<S> r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      S acc(0);
      for (std::size_t j = 0; j < a.cols_; ++j) acc = acc + a(i, j) * v[j];
      r[i] = acc;
    }
    return r;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k)
      if (!scalar_traits<S>::equal(a.c_[k], b.c_[k])) return false;
    return true;
  }

  bool is_zero() const {
    for (const S& x : c_)
      if (!scalar_traits<S>::is_zero(x)) return false;
    return true;
  }
  bool is_antisymmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if (!scalar_traits<S>::equal((*this)(i, j), -(*this)(j, i))) return false;
    return true;
  }

 private:
  static void check_same_shape(const Mat& a, const Mat& b, const char* op) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument(std::string("Mat::") + op + ": shape mismatch");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<S> c_;
};

namespace detail {

/// Pick the pivot row for `col` among rows [start, rows). Exact scalars take
/// the first nonzero entry; floats take the entry of largest magnitude so the
/// elimination stays stable. Returns rows() when the column is effectively
/// zero below `start`.
template <ScalarType S>
std::size_t pivot_row(const Mat<S>& m, std::size_t start, std::size_t col) {
  if constexpr (scalar_traits<S>::is_exact) {
    for (std::size_t r = start; r < m.rows(); ++r)
      if (!scalar_traits<S>::is_zero(m(r, col))) return r;
    return m.rows();
  } else {
    std::size_t best = m.rows();
    S best_abs(0);
    for (std::size_t r = start; r < m.rows(); ++r) {
      const S a = scalar_traits<S>::abs(m(r, col));
      if (!scalar_traits<S>::is_zero(m(r, col)) && (best == m.rows() || best_abs < a)) {
        best = r;
        best_abs = a;
      }
    }
    return best;
  }
}

}  // namespace detail

/// Reduced row echelon form together with the pivot column of each nonzero
/// row, pivots in increasing column order, pivot entries scaled to one.
template <ScalarType S>
struct Echelon {
  Mat<S> reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

template <ScalarType S>
Echelon<S> reduced_row_echelon(Mat<S> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    const std::size_t p = detail::pivot_row(m, r, c);
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const S inv = S(1) / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = inv * m(r, j);
    m(r, c) = S(1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || scalar_traits<S>::is_zero(m(i, c))) continue;
      const S f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
      m(i, c) = S(0);
    }
    pivots.push_back(c);
    ++r;
  }
  // Flush sub-tolerance residue so downstream equality tests see clean zeros.
  if constexpr (!scalar_traits<S>::is_exact) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (scalar_traits<S>::is_zero(m(i, j))) m(i, j) = S(0);
  }
  return {std::move(m), std::move(pivots)};
}

template <ScalarType S>
std::size_t rank(const Mat<S>& m) {
  return reduced_row_echelon(m).rank();
}

/// Determinant by fraction-free-ish Gaussian elimination with the same pivot
/// policy as the echelon routine.
template <ScalarType S>
S determinant(Mat<S> m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: matrix must be square");
  S det(1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const std::size_t p = detail::pivot_row(m, c, c);
    if (p == m.rows()) return S(0);
    if (p != c) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    const S inv = S(1) / m(c, c);
    for (std::size_t i = c + 1; i < m.rows(); ++i) {
      const S f = inv * m(i, c);
      if (scalar_traits<S>::is_zero(f)) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

/// Inverse via Gauss-Jordan on [m | I]. Throws std::domain_error when the
/// matrix is singular (rank below full).
template <ScalarType S>
Mat<S> inverse(const Mat<S>& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("inverse: matrix must be square");
  const std::size_t n = m.rows();
  Mat<S> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = S(1);
  }
  const Echelon<S> e = reduced_row_echelon(std::move(aug));
  if (e.rank() < n || e.pivot_cols.back() >= n)
    throw std::domain_error("inverse: matrix is singular");
  Mat<S> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
  return out;
}

/// Basis of the right kernel {v : m v = 0}, one vector per free column, in
/// increasing free-column order. Empty when the kernel is trivial.
template <ScalarType S>
std::vector<Vec<S>> nullspace(const Mat<S>& m) {
  const Echelon<S> e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vec<S>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<S> v(m.cols());
    v[f] = S(1);
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of m x = b (free variables set to zero), or nullopt when the
/// system is inconsistent.
template <ScalarType S>
std::optional<Vec<S>> solve(const Mat<S>& m, const Vec<S>& b) {
  if (m.rows() != b.dim())
    throw std::invalid_argument("solve: right-hand side dimension mismatch");
  Mat<S> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const Echelon<S> e = reduced_row_echelon(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols())
    return std::nullopt;  // pivot in the augmented column: inconsistent
  Vec<S> x(m.cols());
  for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivot_cols[r]] = e.reduced(r, m.cols());
  return x;
}

/// Render a matrix for error messages and debug dumps.
template <ScalarType S>
std::string to_string(const Mat<S>& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<S, Rat>)
        os << format_rational(m(i, j));
      else
        os << m(i, j);
      os << (j + 1 < m.cols() ? " " : "");
    }
    os << (i + 1 < m.rows() ? "\n" : "]");
  }
  return os.str();
}

template <ScalarType S>
std::string to_string(const Vec<S>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if constexpr (std::is_same_v<S, Rat>)
      os << format_rational(v[i]);
    else
      os << v[i];
    if (i + 1 < v.dim()) os << ", ";
  }
  os << ")";
  return os.str();
}

}  // namespace cosym
