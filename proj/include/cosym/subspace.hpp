#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "cosym/linalg.hpp"

namespace cosym {

/// Linear subspace of R^d held in canonical form: the basis rows are the
/// nonzero rows of a reduced row echelon matrix, so two subspaces are equal
/// exactly when their stored bases agree entrywise.
template <ScalarType S>
class Subspace {
 public:
  static Subspace zero(std::size_t ambient) { return Subspace(ambient, {}); }

  static Subspace full(std::size_t ambient) {
    std::vector<Vec<S>> rows;
    for (std::size_t i = 0; i < ambient; ++i) {
      Vec<S> e(ambient);
      e[i] = S(1);
      rows.push_back(std::move(e));
    }
    return Subspace(ambient, std::move(rows));
  }

  /// Span of arbitrary generators (dependencies and zero vectors are fine).
  static Subspace span(std::size_t ambient, std::span<const Vec<S>> gens) {
    if (ambient == 0) throw std::invalid_argument("Subspace: ambient must be positive");
    std::vector<Vec<S>> rows;
    for (const Vec<S>& g : gens) {
      if (g.dim() != ambient)
        throw std::invalid_argument("Subspace::span: generator dimension mismatch");
      if (!g.is_zero()) rows.push_back(g);
    }
    if (rows.empty()) return zero(ambient);
    const Echelon<S> e = reduced_row_echelon(Mat<S>::from_rows(rows));
    std::vector<Vec<S>> basis;
    for (std::size_t r = 0; r < e.rank(); ++r) basis.push_back(e.reduced.row(r));
    return Subspace(ambient, std::move(basis));
  }

  static Subspace span(std::size_t ambient, const std::vector<Vec<S>>& gens) {
    return span(ambient, std::span<const Vec<S>>(gens));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec<S>>& basis() const { return basis_; }

  /// Basis rows as a matrix; requires dim() > 0.
  Mat<S> basis_matrix() const {
    if (basis_.empty())
      throw std::invalid_argument("Subspace::basis_matrix: zero subspace has no rows");
    return Mat<S>::from_rows(std::span<const Vec<S>>(basis_));
  }

  /// Membership by elimination against the canonical basis.
  bool contains(const Vec<S>& v) const {
    if (v.dim() != ambient_)
      throw std::invalid_argument("Subspace::contains: dimension mismatch");
    Vec<S> r = v;
    for (const Vec<S>& b : basis_) {
      const std::size_t p = pivot_of(b);
      if (!scalar_traits<S>::is_zero(r[p])) r = r - r[p] * b;
    }
    return r.is_zero();
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
      throw std::invalid_argument("Subspace::contains: ambient mismatch");
    for (const Vec<S>& b : other.basis_)
      if (!contains(b)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_ || a.basis_.size() != b.basis_.size()) return false;
    if constexpr (scalar_traits<S>::is_exact) {
      for (std::size_t i = 0; i < a.basis_.size(); ++i)
        if (!(a.basis_[i] == b.basis_[i])) return false;
      return true;
    } else {
      // Float pivots may land in different columns near the tolerance edge;
      // mutual containment is the robust comparison.
      return a.contains(b) && b.contains(a);
    }
  }

 private:
  Subspace(std::size_t ambient, std::vector<Vec<S>> canonical_rows)
      : ambient_(ambient), basis_(std::move(canonical_rows)) {}

  static std::size_t pivot_of(const Vec<S>& row) {
    for (std::size_t j = 0; j < row.dim(); ++j)
      if (!scalar_traits<S>::is_zero(row[j])) return j;
    throw std::invalid_argument("Subspace: zero basis row");
  }

  std::size_t ambient_;
  std::vector<Vec<S>> basis_;
};

/// Sum of subspaces.
template <ScalarType S>
Subspace<S> subspace_sum(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace_sum: ambient mismatch");
  std::vector<Vec<S>> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Subspace<S>::span(a.ambient_dim(), gens);
}

/// Annihilator W° = {covectors vanishing on W}, identified with a subspace of
/// the same R^d via the standard basis pairing. Computed as the kernel of the
/// basis matrix.
template <ScalarType S>
Subspace<S> annihilator(const Subspace<S>& w) {
  if (w.dim() == 0) return Subspace<S>::full(w.ambient_dim());
  if (w.dim() == w.ambient_dim()) return Subspace<S>::zero(w.ambient_dim());
  return Subspace<S>::span(w.ambient_dim(), nullspace(w.basis_matrix()));
}

/// Intersection via annihilators: (A° + B°)° = A ∩ B.
template <ScalarType S>
Subspace<S> intersect(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersect: ambient mismatch");
  return annihilator(subspace_sum(annihilator(a), annihilator(b)));
}

/// Image of a subspace under a linear map (columns act on ambient of w).
template <ScalarType S>
Subspace<S> apply(const Mat<S>& m, const Subspace<S>& w) {
  if (m.cols() != w.ambient_dim())
    throw std::invalid_argument("apply: map domain mismatch");
  std::vector<Vec<S>> images;
  for (const Vec<S>& b : w.basis()) images.push_back(m * b);
  return Subspace<S>::span(m.rows(), images);
}

/// Row space and column space of a matrix.
template <ScalarType S>
Subspace<S> row_space(const Mat<S>& m) {
  std::vector<Vec<S>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return Subspace<S>::span(m.cols(), rows);
}

template <ScalarType S>
Subspace<S> column_space(const Mat<S>& m) {
  return row_space(m.transposed());
}

/// Orthogonal of W with respect to an antisymmetric bilinear form given by
/// `form`: {v : w^T form v = 0 for all w in W}. Kernel of (basis · form).
template <ScalarType S>
Subspace<S> symplectic_orthogonal(const Subspace<S>& w, const Mat<S>& form) {
  if (form.rows() != form.cols() || form.rows() != w.ambient_dim())
    throw std::invalid_argument("symplectic_orthogonal: form shape mismatch");
  if (w.dim() == 0) return Subspace<S>::full(w.ambient_dim());
  return Subspace<S>::span(w.ambient_dim(), nullspace(w.basis_matrix() * form));
}

}  // namespace cosym
