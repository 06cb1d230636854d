#pragma once

// Independent reference implementations used to cross-check the library.
// Each oracle deliberately takes a different route than the code under test:
//  * determinants by cofactor expansion instead of elimination,
//  * wedge values by shuffle-normalized permutation sums instead of
//    coefficient tables,
//  * sigma by inverting the omega-Gram of horizontal lifts instead of
//    pushing the inverse form through a dual frame,
//  * derivatives by finite differences instead of closed forms.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <cosym/contact.hpp>
#include <cosym/quotient.hpp>

namespace oracle {

using cosym::Mat;
using cosym::Rat;
using cosym::Vec;

inline Rat rat(long n, long d = 1) { return Rat(n, d); }

/// Determinant by cofactor expansion along the first row. Exponential, fine
/// for the test sizes (at most 8x8).
template <cosym::ScalarType S>
S det_cofactor(const Mat<S>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_cofactor: not square");
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  S total(0);
  for (std::size_t j = 0; j < n; ++j) {
    Mat<S> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const S term = m(0, j) * det_cofactor(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

/// Sign of a permutation by inversion count.
inline int perm_sign(const std::vector<std::size_t>& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

/// Evaluate a k-form given abstractly as a callable on index tuples:
///   value(v_1..v_k) = sum over all index tuples of
///                     coeff-free expansion through multilinearity.
/// Used as: full antisymmetrized evaluation of products of low-degree forms.
///
/// alpha_wedge_fsquared: (alpha ^ F ^ F)(e_{0..4}) for a covector alpha and
/// antisymmetric matrix F on R^5, via the permutation sum
///   sum_{p in S5} sgn(p) alpha[p0] F(p1,p2) F(p3,p4) / (1! 2! 2!).
template <cosym::ScalarType S>
S alpha_wedge_fsquared(const Vec<S>& alpha, const Mat<S>& f) {
  if (alpha.dim() != 5 || f.rows() != 5 || f.cols() != 5)
    throw std::invalid_argument("alpha_wedge_fsquared: need dimension 5");
  std::vector<std::size_t> p(5);
  std::iota(p.begin(), p.end(), 0);
  S total(0);
  do {
    const S term = alpha[p[0]] * f(p[1], p[2]) * f(p[3], p[4]);
    total = perm_sign(p) == 1 ? total + term : total - term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total / S(4);  // 1! * 2! * 2!
}

/// (F ^ F)(e_0..e_3) on R^4 by the same permutation sum.
template <cosym::ScalarType S>
S f_wedge_f(const Mat<S>& f) {
  if (f.rows() != 4 || f.cols() != 4)
    throw std::invalid_argument("f_wedge_f: need dimension 4");
  std::vector<std::size_t> p(4);
  std::iota(p.begin(), p.end(), 0);
  S total(0);
  do {
    const S term = f(p[0], p[1]) * f(p[2], p[3]);
    total = perm_sign(p) == 1 ? total + term : total - term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total / S(4);  // 2! * 2!
}

/// Reference sigma on a non-null chart: lift each chart direction to the
/// unique horizontal vector above it, form the omega-Gram W of the lifts, and
/// return -W^{-1}. Never touches the dual frame, the inverse form matrix, or
/// the chart projection.
template <cosym::ScalarType S>
Mat<S> sigma_from_horizontal_gram(const cosym::Metric& g, const cosym::ChartPoint<S>& cp) {
  if (cp.chart.kind != cosym::ChartKind::NonNullAxis)
    throw std::invalid_argument("sigma_from_horizontal_gram: non-null charts only");
  const std::size_t n = g.dim();
  const std::vector<cosym::PhaseTangent<S>> basis = cosym::chart_tangent_basis(g, cp);
  const auto [xi_t, xi_s] = cosym::orbit_tangent_frame(cp.representative);
  const Mat<S> omega = cosym::omega_matrix<S>(g);
  const std::size_t m = basis.size();

  // The lift above e_i is h = basis_i + s xi_t + t xi_s: adding orbit
  // generators never changes the chart coordinates, and horizontality
  // (omega(xi_t, h) = omega(xi_s, h) = 0) pins (s, t) uniquely because the
  // orbit Gram [[0, -g(V,V)], [g(V,V), 0]] is invertible off the null cone.
  std::vector<Vec<S>> lifts;
  lifts.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    // Two unknowns (s, t); two linear equations omega(xi_t, h) = omega(xi_s, h) = 0.
    const Vec<S> b = basis[i].flat();
    Mat<S> a2(2, 2);
    Vec<S> rhs(2);
    const auto pair = [&](const Vec<S>& u, const Vec<S>& v) {
      S acc(0);
      const Vec<S> ov = omega * v;
      for (std::size_t k = 0; k < u.dim(); ++k) acc = acc + u[k] * ov[k];
      return acc;
    };
    a2(0, 0) = pair(xi_t, xi_t);
    a2(0, 1) = pair(xi_t, xi_s);
    a2(1, 0) = pair(xi_s, xi_t);
    a2(1, 1) = pair(xi_s, xi_s);
    rhs[0] = S(-1) * pair(xi_t, b);
    rhs[1] = S(-1) * pair(xi_s, b);
    const auto st = cosym::solve(a2, rhs);
    if (!st) throw std::runtime_error("sigma_from_horizontal_gram: lift system inconsistent");
    lifts.push_back(b + (*st)[0] * xi_t + (*st)[1] * xi_s);
  }
  Mat<S> w(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      S acc(0);
      const Vec<S> oj = omega * lifts[j];
      for (std::size_t k = 0; k < 2 * n; ++k) acc = acc + lifts[i][k] * oj[k];
      w(i, j) = acc;
    }
  return S(-1) * cosym::inverse(w);
}

/// Central difference of a scalar function of one coordinate.
inline double central_difference(const std::function<double(double)>& f, double at, double h) {
  return (f(at + h) - f(at - h)) / (2.0 * h);
}

/// Convert an exact vector/matrix to double entries.
inline Vec<double> to_double(const Vec<Rat>& v) {
  Vec<double> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = v[i].convert_to<double>();
  return out;
}

inline Mat<double> to_double(const Mat<Rat>& m) {
  Mat<double> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).convert_to<double>();
  return out;
}

inline cosym::Geodesic<double> to_double(const cosym::Geodesic<Rat>& g) {
  return cosym::Geodesic<double>(to_double(g.position), to_double(g.velocity));
}

}  // namespace oracle
