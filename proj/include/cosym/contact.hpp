#pragma once

#include <cstddef>
#include <stdexcept>

#include "cosym/kform.hpp"
#include "cosym/quotient.hpp"

namespace cosym {

/// The contact package at one null trajectory point: the 1-form induced by
/// the tautological form on the section, its exterior derivative, its kernel
/// (the contact distribution), and the odd-dimensional volume value.
template <ScalarType S>
struct ContactData {
  ChartPoint<S> point;
  Vec<S> alpha;        // covector on the chart tangent space, dim 2n−3
  Mat<S> d_alpha;      // antisymmetric (2n−3) × (2n−3)
  Subspace<S> kernel;  // ker α, dim 2n−4
  S volume_value;      // α ∧ (dα)^{n−2} on the ordered chart basis
};

namespace detail {

inline void require_null_chart(const GaugeChart& c, const char* who) {
  if (c.kind != ChartKind::NullTimeSlice)
    throw std::invalid_argument(std::string(who) + ": chart point is not on a null chart");
}

}  // namespace detail

/// Restrict the tautological form to the null section: the chart covector
/// with entries g(V, ξ_i.dx) over the chart tangent basis. The stereographic
/// directions carry no dx, so the u-entries vanish and the x-entries are the
/// spatial velocity components of the representative.
template <ScalarType S>
Vec<S> contact_form(const Metric& g, const ChartPoint<S>& cp) {
  detail::require_null_chart(cp.chart, "contact_form");
  const std::vector<PhaseTangent<S>> basis = chart_tangent_basis(g, cp);
  Vec<S> alpha(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    alpha[i] = liouville_eval(g, cp.representative, basis[i]);
  return alpha;
}

/// Exterior derivative of the contact form in chart coordinates, from the
/// closed form dα = Σ_j dv_j(u) ∧ dx_j with the stereographic differential:
/// the only nonzero entries pair a u-direction with an x-direction and equal
/// ∂v_j/∂u_k. Exact in rational mode; the finite-difference cross-check lives
/// in float-mode tests.
template <ScalarType S>
Mat<S> contact_exterior_derivative(const Metric& g, const ChartPoint<S>& cp) {
  detail::require_null_chart(cp.chart, "contact_exterior_derivative");
  const std::size_t n = g.dim();
  const std::size_t m = 2 * n - 3;
  Vec<S> u(n - 2);
  for (std::size_t k = 0; k + 2 < n; ++k) u[k] = cp.coords[k];
  const Mat<S> jac = sphere_from_plane_jacobian(u);
  Mat<S> d(m, m);
  for (std::size_t k = 0; k + 2 < n; ++k)
    for (std::size_t j = 0; j + 1 < n; ++j) {
      d(k, (n - 2) + j) = jac(j, k);
      d((n - 2) + j, k) = S(-1) * jac(j, k);
    }
  return d;
}

/// Value of α ∧ (dα)^{n−2} on the ordered basis (∂u_1.., ∂x_1..) — the
/// contact volume. Nonzero exactly when α is a genuine contact form.
template <ScalarType S>
S contact_volume(const Metric& g, const ChartPoint<S>& cp) {
  detail::require_null_chart(cp.chart, "contact_volume");
  const std::size_t m = 2 * g.dim() - 3;
  if (m > 5)
    throw std::invalid_argument("contact_volume: k-form degree cap supports at most signature (3,1)");
  const KForm<S> alpha = KForm<S>::from_covector(contact_form(g, cp));
  const KForm<S> da =
      KForm<S>::from_antisymmetric_matrix(contact_exterior_derivative(g, cp));
  KForm<S> vol = alpha;
  for (std::size_t k = 0; 2 * k + 1 < m; ++k) vol = wedge(vol, da);
  // A top-degree form has a single coefficient: its value on the standard
  // ordered basis under the determinant convention.
  return vol.raw_coefficient(0);
}

/// Assemble the full contact package, asserting the invariants that make α a
/// contact form: α ≠ 0, kernel of codimension one, nonvanishing volume.
template <ScalarType S>
ContactData<S> contact_data(const Metric& g, const ChartPoint<S>& cp) {
  detail::require_null_chart(cp.chart, "contact_data");
  Vec<S> alpha = contact_form(g, cp);
  if (alpha.is_zero())
    throw verification_error("contact_data: induced form vanished");
  Mat<S> d_alpha = contact_exterior_derivative(g, cp);
  if (!d_alpha.is_antisymmetric())
    throw verification_error("contact_data: derivative matrix is not antisymmetric");
  Mat<S> row(1, alpha.dim());
  for (std::size_t i = 0; i < alpha.dim(); ++i) row(0, i) = alpha[i];
  Subspace<S> kernel = Subspace<S>::span(alpha.dim(), nullspace(row));
  if (kernel.dim() + 1 != alpha.dim())
    throw verification_error("contact_data: kernel has wrong dimension");
  S volume = contact_volume(g, cp);
  if (scalar_traits<S>::is_zero(volume))
    throw verification_error("contact_data: volume form vanished");
  return ContactData<S>{cp, std::move(alpha), std::move(d_alpha), std::move(kernel), std::move(volume)};
}

/// The three descriptions of the contact distribution must agree: the
/// horizontal space intersected with the section (projected to the chart),
/// the kernel of α, and the image of sigma.
template <ScalarType S>
bool check_kernel_equals_distribution(const Metric& g, const ChartPoint<S>& cp) {
  detail::require_null_chart(cp.chart, "check_kernel_equals_distribution");
  const std::vector<PhaseTangent<S>> basis = chart_tangent_basis(g, cp);
  std::vector<Vec<S>> flat;
  for (const PhaseTangent<S>& b : basis) flat.push_back(b.flat());
  const Subspace<S> section_tangent = Subspace<S>::span(2 * g.dim(), flat);
  const Subspace<S> horizontal = orbit_symplectic_orthogonal(g, cp.representative);
  const Subspace<S> horizontal_in_section = intersect(horizontal, section_tangent);
  std::vector<Vec<S>> projected;
  for (const Vec<S>& w : horizontal_in_section.basis())
    projected.push_back(project_to_chart(g, cp, PhaseTangent<S>::from_flat(w)));
  const Subspace<S> from_horizontal = Subspace<S>::span(basis.size(), projected);

  const ContactData<S> cd = contact_data(g, cp);
  const QuotientStructure<S> qs = compute_sigma(g, cp);
  return from_horizontal == cd.kernel && cd.kernel == column_space(qs.sigma);
}

/// ker α ∩ ker dα = {0}: the 2-form is nondegenerate on the contact
/// distribution, equivalently the volume is nonzero.
template <ScalarType S>
bool check_characteristic_triviality(const Metric& g, const ChartPoint<S>& cp) {
  detail::require_null_chart(cp.chart, "check_characteristic_triviality");
  const ContactData<S> cd = contact_data(g, cp);
  const Subspace<S> dker =
      Subspace<S>::span(cd.alpha.dim(), nullspace(cd.d_alpha));
  return intersect(cd.kernel, dker).dim() == 0;
}

/// The translation generator (V, 0) must not be tangent to the section: the
/// section crosses each trajectory's flow transversally.
template <ScalarType S>
bool flow_transverse_to_section(const Metric& g, const ChartPoint<S>& cp) {
  const std::vector<PhaseTangent<S>> basis = chart_tangent_basis(g, cp);
  std::vector<Vec<S>> flat;
  for (const PhaseTangent<S>& b : basis) flat.push_back(b.flat());
  const Subspace<S> section_tangent = Subspace<S>::span(2 * g.dim(), flat);
  return !section_tangent.contains(flow_direction(cp.representative));
}

}  // namespace cosym
