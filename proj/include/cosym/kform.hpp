#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "cosym/linalg.hpp"

namespace cosym {

namespace detail {

/// All size-k index subsets of {0..d-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> index_combinations(std::size_t d, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > d) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    // advance to the next combination
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (cur[i] + 1 <= d - (k - i)) {
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

/// Sort indices ascending, tracking sign of the permutation. Returns 0 when a
/// repeated index makes the multi-index degenerate.
inline int sort_with_sign(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

}  // namespace detail

/// Alternating k-form on R^d, stored as one coefficient per lexicographic
/// index combination with the determinant convention:
///   (dx_{i1} ∧ … ∧ dx_{ik})(v1,…,vk) = det [ v_c[i_r] ]_{r,c}.
/// Degree is capped at 5, which covers everything up to the contact volume
/// form in ambient dimension 7.
template <ScalarType S>
class KForm {
 public:
  KForm(std::size_t dim, std::size_t degree)
      : dim_(dim), deg_(degree), combos_(detail::index_combinations(dim, degree)) {
    if (dim == 0) throw std::invalid_argument("KForm: ambient dimension must be positive");
    if (degree > 5) throw std::invalid_argument("KForm: degree above 5 is not supported");
    if (degree > dim) throw std::invalid_argument("KForm: degree exceeds ambient dimension");
    c_.assign(combos_.size(), S(0));
  }

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return deg_; }
  std::size_t coefficient_count() const { return c_.size(); }

  /// Coefficient of the (sorted, distinct) combination with lexicographic
  /// index `slot`; mainly for tests walking the raw storage.
  const S& raw_coefficient(std::size_t slot) const { return c_.at(slot); }
  const std::vector<std::size_t>& combination(std::size_t slot) const {
    return combos_.at(slot);
  }

  /// Coefficient addressed by an arbitrary index tuple; sign-adjusts for the
  /// sorting permutation, zero for repeated indices.
  S coefficient(std::vector<std::size_t> idx) const {
    check_indices(idx);
    const int sign = detail::sort_with_sign(idx);
    if (sign == 0) return S(0);
    return sign == 1 ? c_[slot_of(idx)] : S(-1) * c_[slot_of(idx)];
  }

  /// Set the coefficient of dx_{i1}∧…∧dx_{ik}. Repeated indices are
  /// rejected: the intended coefficient would be meaningless.
  void set_coefficient(std::vector<std::size_t> idx, const S& value) {
    check_indices(idx);
    const int sign = detail::sort_with_sign(idx);
    if (sign == 0)
      throw std::invalid_argument("KForm::set_coefficient: repeated index");
    c_[slot_of(idx)] = sign == 1 ? value : S(-1) * value;
  }

  /// Evaluate on k vectors via the determinant convention.
  S operator()(std::span<const Vec<S>> args) const {
    if (args.size() != deg_)
      throw std::invalid_argument("KForm: wrong number of arguments");
    for (const Vec<S>& v : args)
      if (v.dim() != dim_)
        throw std::invalid_argument("KForm: argument dimension mismatch");
    if (deg_ == 0) return c_.empty() ? S(0) : c_[0];
    S total(0);
    Mat<S> minor(deg_, deg_);
    for (std::size_t s = 0; s < combos_.size(); ++s) {
      if (scalar_traits<S>::is_exact && scalar_traits<S>::is_zero(c_[s])) continue;
      for (std::size_t r = 0; r < deg_; ++r)
        for (std::size_t col = 0; col < deg_; ++col) minor(r, col) = args[col][combos_[s][r]];
      total = total + c_[s] * determinant(minor);
    }
    return total;
  }

  S operator()(const std::vector<Vec<S>>& args) const {
    return (*this)(std::span<const Vec<S>>(args));
  }

  friend KForm operator+(const KForm& a, const KForm& b) {
    if (a.dim_ != b.dim_ || a.deg_ != b.deg_)
      throw std::invalid_argument("KForm::operator+: shape mismatch");
    KForm r = a;
    for (std::size_t s = 0; s < r.c_.size(); ++s) r.c_[s] = r.c_[s] + b.c_[s];
    return r;
  }
  friend KForm operator*(const S& s, const KForm& a) {
    KForm r = a;
    for (S& x : r.c_) x = s * x;
    return r;
  }

  friend bool operator==(const KForm& a, const KForm& b) {
    if (a.dim_ != b.dim_ || a.deg_ != b.deg_) return false;
    for (std::size_t s = 0; s < a.c_.size(); ++s)
      if (!scalar_traits<S>::equal(a.c_[s], b.c_[s])) return false;
    return true;
  }

  bool is_zero() const {
    for (const S& x : c_)
      if (!scalar_traits<S>::is_zero(x)) return false;
    return true;
  }

  /// 1-form from a coefficient covector.
  static KForm from_covector(const Vec<S>& a) {
    KForm f(a.dim(), 1);
    for (std::size_t i = 0; i < a.dim(); ++i) f.c_[i] = a[i];
    return f;
  }

  /// 2-form from an antisymmetric matrix A, convention f(u,v) = u^T A v.
  static KForm from_antisymmetric_matrix(const Mat<S>& a) {
    if (!a.is_antisymmetric())
      throw std::invalid_argument("KForm: matrix is not antisymmetric");
    KForm f(a.rows(), 2);
    for (std::size_t s = 0; s < f.combos_.size(); ++s)
      f.c_[s] = a(f.combos_[s][0], f.combos_[s][1]);
    return f;
  }

  /// Matrix of a 2-form, A[i][j] = f(e_i, e_j).
  Mat<S> to_matrix() const {
    if (deg_ != 2) throw std::invalid_argument("KForm::to_matrix: degree must be 2");
    Mat<S> a(dim_, dim_);
    for (std::size_t s = 0; s < combos_.size(); ++s) {
      a(combos_[s][0], combos_[s][1]) = c_[s];
      a(combos_[s][1], combos_[s][0]) = S(-1) * c_[s];
    }
    return a;
  }

 private:
  void check_indices(const std::vector<std::size_t>& idx) const {
    if (idx.size() != deg_)
      throw std::invalid_argument("KForm: index tuple has wrong length");
    for (std::size_t i : idx)
      if (i >= dim_) throw std::invalid_argument("KForm: index out of range");
  }

  /// Lexicographic slot of a sorted combination (binary search in the combo
  /// table; tables are tiny, at most C(9,4) = 126 entries).
  std::size_t slot_of(const std::vector<std::size_t>& sorted) const {
    const auto it = std::lower_bound(combos_.begin(), combos_.end(), sorted);
    if (it == combos_.end() || *it != sorted)
      throw std::invalid_argument("KForm: combination lookup failed");
    return static_cast<std::size_t>(it - combos_.begin());
  }

  std::size_t dim_, deg_;
  std::vector<std::vector<std::size_t>> combos_;
  std::vector<S> c_;

  template <ScalarType T>
  friend KForm<T> wedge(const KForm<T>& a, const KForm<T>& b);
};

/// Wedge product. The shuffle sign is the parity of the interleaving: the
/// number of pairs (i ∈ I, j ∈ J) with i > j.
template <ScalarType S>
KForm<S> wedge(const KForm<S>& a, const KForm<S>& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("wedge: ambient dimension mismatch");
  if (a.degree() + b.degree() > a.dim())
    throw std::invalid_argument("wedge: combined degree exceeds ambient dimension");
  KForm<S> r(a.dim(), a.degree() + b.degree());
  for (std::size_t sa = 0; sa < a.combos_.size(); ++sa) {
    if (scalar_traits<S>::is_exact && scalar_traits<S>::is_zero(a.c_[sa])) continue;
    for (std::size_t sb = 0; sb < b.combos_.size(); ++sb) {
      if (scalar_traits<S>::is_exact && scalar_traits<S>::is_zero(b.c_[sb])) continue;
      const auto& ia = a.combos_[sa];
      const auto& ib = b.combos_[sb];
      // Disjointness check and inversion count in one pass.
      bool disjoint = true;
      std::size_t inversions = 0;
      for (std::size_t i : ia)
        for (std::size_t j : ib) {
          if (i == j) {
            disjoint = false;
            break;
          }
          if (i > j) ++inversions;
        }
      if (!disjoint) continue;
      std::vector<std::size_t> merged;
      merged.reserve(ia.size() + ib.size());
      merged.insert(merged.end(), ia.begin(), ia.end());
      merged.insert(merged.end(), ib.begin(), ib.end());
      std::sort(merged.begin(), merged.end());
      const std::size_t slot = r.slot_of(merged);
      const S term = a.c_[sa] * b.c_[sb];
      r.c_[slot] = (inversions % 2 == 0) ? r.c_[slot] + term : r.c_[slot] - term;
    }
  }
  return r;
}

}  // namespace cosym
