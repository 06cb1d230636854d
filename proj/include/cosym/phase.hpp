#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cosym/metric.hpp"
#include "cosym/subspace.hpp"

namespace cosym {

/// A parametrized geodesic of the flat metric, recorded by its state at
/// parameter zero: position X and velocity V (nonzero). The curve itself is
/// t ↦ X + tV, so this pair is a global coordinate on the space of
/// parametrized geodesics, identified with phase space R^{2n}.
template <ScalarType S>
struct Geodesic {
  Vec<S> position;
  Vec<S> velocity;

  Geodesic(Vec<S> x, Vec<S> v) : position(std::move(x)), velocity(std::move(v)) {
    if (position.dim() != velocity.dim())
      throw std::invalid_argument("Geodesic: position/velocity dimension mismatch");
    if (velocity.is_zero())
      throw std::invalid_argument("Geodesic: velocity must be nonzero");
  }

  std::size_t dim() const { return position.dim(); }

  /// Flatten to phase-space coordinates, position block first.
  Vec<S> phase_coords() const {
    Vec<S> z(2 * dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      z[i] = position[i];
      z[dim() + i] = velocity[i];
    }
    return z;
  }

  friend bool operator==(const Geodesic& a, const Geodesic& b) {
    return a.position == b.position && a.velocity == b.velocity;
  }
};

/// Tangent vector to phase space at some geodesic: a (δX, δV) pair.
template <ScalarType S>
struct PhaseTangent {
  Vec<S> dx;
  Vec<S> dv;

  PhaseTangent(Vec<S> dx_, Vec<S> dv_) : dx(std::move(dx_)), dv(std::move(dv_)) {
    if (dx.dim() != dv.dim())
      throw std::invalid_argument("PhaseTangent: block dimension mismatch");
  }

  /// Build from flat phase-space coordinates (position block first).
  static PhaseTangent from_flat(const Vec<S>& z) {
    if (z.dim() % 2 != 0)
      throw std::invalid_argument("PhaseTangent: flat vector has odd dimension");
    const std::size_t n = z.dim() / 2;
    Vec<S> dx(n), dv(n);
    for (std::size_t i = 0; i < n; ++i) {
      dx[i] = z[i];
      dv[i] = z[n + i];
    }
    return PhaseTangent(std::move(dx), std::move(dv));
  }

  std::size_t dim() const { return dx.dim(); }

  Vec<S> flat() const {
    Vec<S> z(2 * dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      z[i] = dx[i];
      z[dim() + i] = dv[i];
    }
    return z;
  }
};

/// Canonical symplectic pairing on phase space:
///   ω(ξ, ξ') = g(ξ.dv, ξ'.dx) − g(ξ'.dv, ξ.dx).
template <ScalarType S>
S omega_eval(const Metric& g, const PhaseTangent<S>& a, const PhaseTangent<S>& b) {
  if (a.dim() != g.dim() || b.dim() != g.dim())
    throw std::invalid_argument("omega_eval: dimension mismatch");
  return g.inner(a.dv, b.dx) - g.inner(b.dv, a.dx);
}

/// Matrix of ω in flat coordinates (position block first):
///   Ω = [[0, −G], [G, 0]], so ω(ξ, ξ') = ξ_flat^T Ω ξ'_flat.
template <ScalarType S>
Mat<S> omega_matrix(const Metric& g) {
  const std::size_t n = g.dim();
  Mat<S> o(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    o(i, n + i) = S(-g.diag_sign(i));
    o(n + i, i) = S(g.diag_sign(i));
  }
  return o;
}

/// Matrix of the inverse pairing, computed by actually inverting Ω (the
/// closed block form is a test oracle, not the implementation).
template <ScalarType S>
Mat<S> omega_inverse_matrix(const Metric& g) {
  return inverse(omega_matrix<S>(g));
}

/// Tautological 1-form at γ: ϖ(δγ) = g(V, δX).
template <ScalarType S>
S liouville_eval(const Metric& g, const Geodesic<S>& gamma, const PhaseTangent<S>& t) {
  if (gamma.dim() != g.dim() || t.dim() != g.dim())
    throw std::invalid_argument("liouville_eval: dimension mismatch");
  return g.inner(gamma.velocity, t.dx);
}

/// Geodesic energy H(γ) = ½ g(V, V). Its sign is the causal class of γ.
template <ScalarType S>
S energy(const Metric& g, const Geodesic<S>& gamma) {
  return S(1) / S(2) * g.norm_sq(gamma.velocity);
}

/// Differential of the energy at γ as a flat covector: dH = (0 | G V).
template <ScalarType S>
Vec<S> energy_differential(const Metric& g, const Geodesic<S>& gamma) {
  const std::size_t n = g.dim();
  Vec<S> d(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    d[n + i] = S(g.diag_sign(i)) * gamma.velocity[i];
  return d;
}

/// The geodesic flow direction at γ in flat coordinates: (V, 0).
template <ScalarType S>
Vec<S> flow_direction(const Geodesic<S>& gamma) {
  const std::size_t n = gamma.dim();
  Vec<S> f(2 * n);
  for (std::size_t i = 0; i < n; ++i) f[i] = gamma.velocity[i];
  return f;
}

// ---------------------------------------------------------------------------
// Extended contact-type description on M × R (state plus an independent
// parameter coordinate). Coordinates are ordered (x_0..x_{n-1}, v_0..v_{n-1},
// t), dimension 2n + 1.
// ---------------------------------------------------------------------------

template <ScalarType S>
struct ExtendedPoint {
  Vec<S> x;
  Vec<S> v;
  S t;

  ExtendedPoint(Vec<S> x_, Vec<S> v_, S t_) : x(std::move(x_)), v(std::move(v_)), t(std::move(t_)) {
    if (x.dim() != v.dim())
      throw std::invalid_argument("ExtendedPoint: block dimension mismatch");
  }
  std::size_t space_dim() const { return x.dim(); }
};

/// The extended 1-form ϖ_y(δ) = g(v, δx) − ½ g(v, v) δt on R^{2n+1}, returned
/// as its coefficient covector at y.
template <ScalarType S>
Vec<S> extended_form_covector(const Metric& g, const ExtendedPoint<S>& y) {
  const std::size_t n = g.dim();
  if (y.space_dim() != n)
    throw std::invalid_argument("extended_form_covector: dimension mismatch");
  Vec<S> a(2 * n + 1);
  for (std::size_t i = 0; i < n; ++i) a[i] = S(g.diag_sign(i)) * y.v[i];
  a[2 * n] = S(-1) / S(2) * g.norm_sq(y.v);
  return a;
}

/// Matrix of the exterior derivative of the extended form at y:
///   dϖ = Σ_i G_ii dv_i∧dx_i − Σ_i G_ii v_i dv_i∧dt.
template <ScalarType S>
Mat<S> extended_form_derivative(const Metric& g, const ExtendedPoint<S>& y) {
  const std::size_t n = g.dim();
  if (y.space_dim() != n)
    throw std::invalid_argument("extended_form_derivative: dimension mismatch");
  Mat<S> a(2 * n + 1, 2 * n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const S gi = S(g.diag_sign(i));
    a(n + i, i) = gi;          // dv_i ∧ dx_i
    a(i, n + i) = S(-1) * gi;
    a(n + i, 2 * n) = S(-1) * gi * y.v[i];  // −G_ii v_i dv_i ∧ dt
    a(2 * n, n + i) = gi * y.v[i];
  }
  return a;
}

/// Kernel of dϖ at y. For nonzero v this is the line spanned by (v, 0, 1),
/// the lifted geodesic flow; callers assert that property, this routine just
/// reports the kernel.
template <ScalarType S>
Subspace<S> extended_form_kernel(const Metric& g, const ExtendedPoint<S>& y) {
  if (y.v.is_zero())
    throw std::invalid_argument("extended_form_kernel: zero velocity");
  return Subspace<S>::span(2 * g.dim() + 1, nullspace(extended_form_derivative(g, y)));
}

/// Dimensions produced by the symplectic reduction chain over the null
/// stratum: the energy level set, its quotient by the flow inside the level
/// set, and the chart dimension of the space of unparametrized geodesics.
struct ReductionAudit {
  std::size_t level_set_dim;
  std::size_t reduced_dim;
  std::size_t trajectory_dim;

  friend bool operator==(const ReductionAudit&, const ReductionAudit&) = default;
};

/// Audit the reduction dimensions at a null geodesic: checks dH ≠ 0 (so the
/// level set is a hypersurface), checks the flow direction lies inside
/// ker dH, and returns the dimension triple (2n−1, 2n−2, 2n−3).
template <ScalarType S>
ReductionAudit reduction_dimension_audit(const Metric& g, const Geodesic<S>& gamma) {
  if (g.classify(gamma.velocity) != CausalKind::Null)
    throw std::domain_error("reduction_dimension_audit: geodesic is not null");
  const std::size_t n = g.dim();
  const Vec<S> dh = energy_differential(g, gamma);
  if (dh.is_zero())
    throw verification_error("reduction audit: dH vanished at a nonzero velocity");
  // dh has rank one as a covector, so the level set is a hypersurface.
  S pairing(0);
  const Vec<S> flow = flow_direction(gamma);
  for (std::size_t i = 0; i < 2 * n; ++i) pairing = pairing + dh[i] * flow[i];
  if (!scalar_traits<S>::is_zero(pairing))
    throw verification_error("reduction audit: flow direction escapes the energy level set");
  return ReductionAudit{2 * n - 1, 2 * n - 2, 2 * n - 3};
}

}  // namespace cosym
