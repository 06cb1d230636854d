#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cosym/charts.hpp"

namespace cosym {

/// Everything the quotient carries at one trajectory point, expressed in one
/// chart: the horizontal space upstairs, its image downstairs, and the chart
/// representative of the co-symplectic tensor with its rank.
template <ScalarType S>
struct QuotientStructure {
  Subspace<S> f_up;    // ω-orthogonal of the orbit tangent, in phase coordinates
  Subspace<S> f_down;  // its image in intrinsic chart coordinates
  Mat<S> sigma;        // antisymmetric chart representative of the quotient tensor
  std::size_t sigma_rank;
};

/// Split a phase tangent at the representative into section + orbit parts and
/// return the section part's chart coordinates. This is the chart realization
/// of the quotient differential: orbit directions map to zero.
///
/// In non-null charts every phase tangent decomposes; in null charts only
/// vectors tangent to the energy level set do, and anything else is rejected
/// as outside the domain of the projection.
template <ScalarType S>
Vec<S> project_to_chart(const Metric& g, const ChartPoint<S>& cp, const PhaseTangent<S>& v) {
  const std::size_t n = g.dim();
  if (v.dim() != n) throw std::invalid_argument("project_to_chart: dimension mismatch");
  const std::vector<PhaseTangent<S>> basis = chart_tangent_basis(g, cp);
  const auto [xi_t, xi_s] = orbit_tangent_frame(cp.representative);
  const std::size_t m = basis.size();
  Mat<S> cols(2 * n, m + 2);
  for (std::size_t j = 0; j < m; ++j) {
    const Vec<S> f = basis[j].flat();
    for (std::size_t i = 0; i < 2 * n; ++i) cols(i, j) = f[i];
  }
  for (std::size_t i = 0; i < 2 * n; ++i) {
    cols(i, m) = xi_t[i];
    cols(i, m + 1) = xi_s[i];
  }
  const auto sol = solve(cols, v.flat());
  if (!sol)
    throw std::domain_error("project_to_chart: tangent vector has no section + orbit split");
  Vec<S> out(m);
  for (std::size_t j = 0; j < m; ++j) out[j] = (*sol)[j];
  return out;
}

namespace detail {

/// Covectors β_i dual to the chart coordinates, extended by zero on the orbit
/// directions — i.e. a basis of the orbit-tangent annihilator expressed in
/// chart-dual coordinates. In null charts the defining system is
/// underdetermined; any particular solution gives the same sigma because the
/// ambiguity is spanned by the energy differential, and Ω⁻¹ maps that onto
/// the orbit direction (V, 0), which every β annihilates.
template <ScalarType S>
std::vector<Vec<S>> chart_dual_frame(const Metric& g, const ChartPoint<S>& cp) {
  const std::size_t n = g.dim();
  const std::vector<PhaseTangent<S>> basis = chart_tangent_basis(g, cp);
  const auto [xi_t, xi_s] = orbit_tangent_frame(cp.representative);
  const std::size_t m = basis.size();
  Mat<S> rows(m + 2, 2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    rows(0, i) = xi_t[i];
    rows(1, i) = xi_s[i];
  }
  for (std::size_t j = 0; j < m; ++j) {
    const Vec<S> f = basis[j].flat();
    for (std::size_t i = 0; i < 2 * n; ++i) rows(2 + j, i) = f[i];
  }
  std::vector<Vec<S>> beta;
  beta.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Vec<S> rhs(m + 2);
    rhs[2 + i] = S(1);
    const auto b = solve(rows, rhs);
    if (!b)
      throw verification_error("chart dual frame: section is not transverse to the orbit");
    beta.push_back(*b);
  }
  return beta;
}

/// sigma[i][j] = β_j · P · β_i for a contravariant 2-tensor P in phase
/// coordinates.
template <ScalarType S>
Mat<S> push_tensor_through_frame(const std::vector<Vec<S>>& beta, const Mat<S>& p) {
  const std::size_t m = beta.size();
  Mat<S> sigma(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec<S> pbi = p * beta[i];
    for (std::size_t j = 0; j < m; ++j) {
      S acc(0);
      for (std::size_t k = 0; k < pbi.dim(); ++k) acc = acc + beta[j][k] * pbi[k];
      sigma(i, j) = acc;
    }
  }
  return sigma;
}

}  // namespace detail

/// Compute the chart representative of the quotient co-symplectic tensor at a
/// trajectory point, together with the horizontal space and its image. The
/// image identity Im(sigma) = f_down is asserted — its failure would falsify
/// the structure this library exists to verify.
template <ScalarType S>
QuotientStructure<S> compute_sigma(const Metric& g, const ChartPoint<S>& cp) {
  const std::vector<Vec<S>> beta = detail::chart_dual_frame(g, cp);
  Mat<S> sigma =
      detail::push_tensor_through_frame(beta, omega_inverse_matrix<S>(g));
  if (!sigma.is_antisymmetric())
    throw verification_error("compute_sigma: representative is not antisymmetric");
  const Subspace<S> f_up = orbit_symplectic_orthogonal(g, cp.representative);
  std::vector<Vec<S>> pushed;
  for (const Vec<S>& b : f_up.basis())
    pushed.push_back(project_to_chart(g, cp, PhaseTangent<S>::from_flat(b)));
  Subspace<S> f_down = Subspace<S>::span(beta.size(), pushed);
  const std::size_t r = rank(sigma);
  if (!(column_space(sigma) == f_down))
    throw verification_error("compute_sigma: Im(sigma) differs from the projected horizontal space");
  return QuotientStructure<S>{f_up, std::move(f_down), std::move(sigma), r};
}

/// Recompute sigma through a shifted fiber point: push the phase-space
/// inverse-form tensor forward through the reparametrization differential
/// before expressing it in the chart frame, and return the proportionality
/// factor against the plain sigma. The factor must be the reparametrization's
/// scale — positive — or conformal invariance is falsified.
template <ScalarType S>
S check_conformal_class(const Metric& g, const ChartPoint<S>& cp, const AffineReparam<S>& phi) {
  const std::vector<Vec<S>> beta = detail::chart_dual_frame(g, cp);
  const Mat<S> omega_inv = omega_inverse_matrix<S>(g);
  const Mat<S> m = action_differential(phi, g.dim());
  const Mat<S> sigma = detail::push_tensor_through_frame(beta, omega_inv);
  const Mat<S> shifted =
      detail::push_tensor_through_frame(beta, m * omega_inv * m.transposed());
  // Extract the entrywise factor from the first nonzero slot, then verify.
  S factor(0);
  bool found = false;
  for (std::size_t i = 0; i < sigma.rows() && !found; ++i)
    for (std::size_t j = 0; j < sigma.cols() && !found; ++j)
      if (!scalar_traits<S>::is_zero(sigma(i, j))) {
        factor = shifted(i, j) / sigma(i, j);
        found = true;
      }
  if (!found) throw verification_error("check_conformal_class: sigma vanished identically");
  if (!(shifted == factor * sigma))
    throw verification_error("check_conformal_class: shifted sigma is not proportional");
  if (scalar_traits<S>::sign(factor) <= 0)
    throw verification_error("check_conformal_class: conformal factor is not positive");
  return factor;
}

/// Invert sigma on a non-null chart, where it must be a full-rank
/// antisymmetric matrix — the reduced symplectic structure. Singularity here
/// falsifies nondegeneracy on the massive strata.
template <ScalarType S>
Mat<S> symplectic_inverse_on_massive(const QuotientStructure<S>& qs) {
  if (qs.sigma_rank != qs.sigma.rows())
    throw verification_error("symplectic_inverse_on_massive: sigma is singular");
  const Mat<S> inv = inverse(qs.sigma);
  if (!inv.is_antisymmetric())
    throw verification_error("symplectic_inverse_on_massive: inverse is not antisymmetric");
  return inv;
}

/// For one trajectory seen in two charts, conjugate sigma from chart A to
/// chart B through the transition differential and return the proportionality
/// factor, which must be positive (the two representatives define the same
/// ray). The exact value is the reciprocal of the gauge scale from A's
/// representative to B's.
template <ScalarType S>
S chart_overlap_factor(const Metric& g, const ChartPoint<S>& a, const ChartPoint<S>& b) {
  const Geodesic<S>& ga = a.representative;
  const Geodesic<S>& gb = b.representative;
  if (ga.dim() != g.dim() || gb.dim() != g.dim())
    throw std::invalid_argument("chart_overlap_factor: dimension mismatch");
  // Recover the reparametrization carrying A's representative to B's.
  std::size_t k = 0;
  for (std::size_t i = 1; i < g.dim(); ++i)
    if (scalar_traits<S>::abs(ga.velocity[k]) < scalar_traits<S>::abs(ga.velocity[i])) k = i;
  const S scale = gb.velocity[k] / ga.velocity[k];
  if (scalar_traits<S>::sign(scale) <= 0)
    throw verification_error("chart_overlap_factor: transition reverses orientation");
  const S shift = (gb.position[k] - ga.position[k]) / ga.velocity[k];
  const AffineReparam<S> phi(scale, shift);
  if (!(act(phi, ga) == gb))
    throw std::invalid_argument("chart_overlap_factor: chart points carry different trajectories");

  const Mat<S> m = action_differential(phi, g.dim());
  const std::vector<PhaseTangent<S>> basis_a = chart_tangent_basis(g, a);
  const std::size_t ma = basis_a.size();
  const Mat<S> sigma_a = compute_sigma(g, a).sigma;
  const Mat<S> sigma_b = compute_sigma(g, b).sigma;
  // Transition differential: push each A-direction through the action and
  // project into B's chart.
  Mat<S> l(sigma_b.rows(), ma);
  for (std::size_t j = 0; j < ma; ++j) {
    const Vec<S> image =
        project_to_chart(g, b, PhaseTangent<S>::from_flat(m * basis_a[j].flat()));
    for (std::size_t i = 0; i < image.dim(); ++i) l(i, j) = image[i];
  }
  const Mat<S> transported = l * sigma_a * l.transposed();
  S factor(0);
  bool found = false;
  for (std::size_t i = 0; i < sigma_b.rows() && !found; ++i)
    for (std::size_t j = 0; j < sigma_b.cols() && !found; ++j)
      if (!scalar_traits<S>::is_zero(transported(i, j))) {
        factor = sigma_b(i, j) / transported(i, j);
        found = true;
      }
  if (!found)
    throw verification_error("chart_overlap_factor: transported sigma vanished");
  if (!(sigma_b == factor * transported))
    throw verification_error("chart_overlap_factor: overlap congruence failed");
  if (scalar_traits<S>::sign(factor) <= 0)
    throw verification_error("chart_overlap_factor: overlap factor is not positive");
  return factor;
}

}  // namespace cosym
