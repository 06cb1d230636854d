#pragma once

#include <cstddef>
#include <stdexcept>

#include "cosym/linalg.hpp"

namespace cosym {

/// Causal type of a vector under an indefinite metric.
enum class CausalKind { SpaceLike, TimeLike, Null };

inline const char* to_string(CausalKind k) {
  switch (k) {
    case CausalKind::SpaceLike: return "spacelike";
    case CausalKind::TimeLike: return "timelike";
    case CausalKind::Null: return "null";
  }
  return "?";
}

/// Flat diagonal metric of signature (p, q): p plus-entries followed by q
/// minus-entries, so time-like directions sit in the last q coordinates.
/// Default construction gives 4-dimensional Minkowski space, signature (3, 1).
class Metric {
 public:
  Metric(std::size_t plus, std::size_t minus) : p_(plus), q_(minus) {
    if (p_ + q_ < 2)
      throw std::invalid_argument("Metric: need at least two dimensions");
    if (q_ < 1)
      throw std::invalid_argument("Metric: need at least one time-like direction");
  }
  Metric() : Metric(3, 1) {}

  std::size_t plus() const { return p_; }
  std::size_t minus() const { return q_; }
  std::size_t dim() const { return p_ + q_; }

  /// Diagonal entry: +1 for the first p coordinates, -1 after.
  int diag_sign(std::size_t i) const {
    if (i >= dim()) throw std::invalid_argument("Metric: index out of range");
    return i < p_ ? 1 : -1;
  }

  template <ScalarType S>
  Mat<S> matrix() const {
    Mat<S> g(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) g(i, i) = S(diag_sign(i));
    return g;
  }

  /// Pseudo-inner product g(u, v).
  template <ScalarType S>
  S inner(const Vec<S>& u, const Vec<S>& v) const {
    if (u.dim() != dim() || v.dim() != dim())
      throw std::invalid_argument("Metric::inner: dimension mismatch");
    S acc(0);
    for (std::size_t i = 0; i < dim(); ++i) {
      const S term = u[i] * v[i];
      acc = (i < p_) ? acc + term : acc - term;
    }
    return acc;
  }

  template <ScalarType S>
  S norm_sq(const Vec<S>& v) const {
    return inner(v, v);
  }

  /// Causal classification of a nonzero vector. A zero vector has no causal
  /// type and is rejected.
  template <ScalarType S>
  CausalKind classify(const Vec<S>& v) const {
    if (v.is_zero())
      throw std::invalid_argument("Metric::classify: zero vector has no causal kind");
    const S h = norm_sq(v);
    const int s = scalar_traits<S>::sign(h);
    if (s > 0) return CausalKind::SpaceLike;
    if (s < 0) return CausalKind::TimeLike;
    return CausalKind::Null;
  }

 private:
  std::size_t p_, q_;
};

/// Causal classification together with the invariant it derives from.
template <ScalarType S>
struct CausalClass {
  S h;              // g(v, v)
  CausalKind kind;  // sign of h
};

template <ScalarType S>
CausalClass<S> causal_class(const Metric& g, const Vec<S>& v) {
  return CausalClass<S>{g.norm_sq(v), g.classify(v)};
}

}  // namespace cosym
