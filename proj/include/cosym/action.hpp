#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cosym/phase.hpp"

namespace cosym {

/// An orientation-preserving affine reparametrization t ↦ a·t + b, a > 0.
/// Acting on a parametrized geodesic it shifts the base point along the curve
/// and rescales the velocity:  (a,b)·(X, V) = (X + bV, aV).
template <ScalarType S>
struct AffineReparam {
  S scale;
  S shift;

  AffineReparam(S a, S b) : scale(std::move(a)), shift(std::move(b)) {
    if (scalar_traits<S>::sign(scale) <= 0)
      throw std::invalid_argument("AffineReparam: scale must be positive");
  }

  static AffineReparam identity() { return AffineReparam(S(1), S(0)); }

  bool is_identity() const {
    return scalar_traits<S>::equal(scale, S(1)) && scalar_traits<S>::is_zero(shift);
  }

  friend bool operator==(const AffineReparam& x, const AffineReparam& y) {
    return scalar_traits<S>::equal(x.scale, y.scale) &&
           scalar_traits<S>::equal(x.shift, y.shift);
  }
};

/// Group law chosen so that act(compose(outer, inner), γ) equals
/// act(outer, act(inner, γ)); see the act() docstring for the orbit picture.
template <ScalarType S>
AffineReparam<S> compose(const AffineReparam<S>& outer, const AffineReparam<S>& inner) {
  return AffineReparam<S>(outer.scale * inner.scale,
                          inner.shift + inner.scale * outer.shift);
}

template <ScalarType S>
AffineReparam<S> group_inverse(const AffineReparam<S>& phi) {
  return AffineReparam<S>(S(1) / phi.scale, S(-1) * phi.shift / phi.scale);
}

/// Reparametrize: the curve s ↦ X + (a·s + b)V is again a geodesic with base
/// point X + bV and velocity aV.
template <ScalarType S>
Geodesic<S> act(const AffineReparam<S>& phi, const Geodesic<S>& gamma) {
  return Geodesic<S>(gamma.position + phi.shift * gamma.velocity,
                     phi.scale * gamma.velocity);
}

/// Differential of the action of phi on phase space in flat coordinates
/// (position block first): the constant matrix [[I, bI], [0, aI]].
template <ScalarType S>
Mat<S> action_differential(const AffineReparam<S>& phi, std::size_t n) {
  Mat<S> m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = S(1);
    m(i, n + i) = phi.shift;
    m(n + i, n + i) = phi.scale;
  }
  return m;
}

/// Verify (Dφ)^T Ω (Dφ) = a·Ω and return the conformal factor a. A mismatch
/// means the symplectic-scaling law failed and is reported as falsification.
template <ScalarType S>
S pullback_scale_factor(const Metric& g, const AffineReparam<S>& phi) {
  const Mat<S> m = action_differential(phi, g.dim());
  const Mat<S> omega = omega_matrix<S>(g);
  if (!(m.transposed() * omega * m == phi.scale * omega))
    throw verification_error("pullback of the symplectic form is not a·ω");
  return phi.scale;
}

/// Verify (Dφ) Ω⁻¹ (Dφ)^T = a·Ω⁻¹ — the bivector pushes forward with the
/// same factor — and return it.
template <ScalarType S>
S pushforward_scale_factor(const Metric& g, const AffineReparam<S>& phi) {
  const Mat<S> m = action_differential(phi, g.dim());
  const Mat<S> omega_inv = omega_inverse_matrix<S>(g);
  if (!(m * omega_inv * m.transposed() == phi.scale * omega_inv))
    throw verification_error("pushforward of the Poisson bivector is not a·ω⁻¹");
  return phi.scale;
}

// ---------------------------------------------------------------------------
// Orbits of the reparametrization group inside phase space.
// ---------------------------------------------------------------------------

/// Frame of the orbit tangent space at γ in flat coordinates: the shift
/// generator (V, 0) followed by the scale generator (0, V).
template <ScalarType S>
std::pair<Vec<S>, Vec<S>> orbit_tangent_frame(const Geodesic<S>& gamma) {
  const std::size_t n = gamma.dim();
  Vec<S> shift_gen(2 * n), scale_gen(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    shift_gen[i] = gamma.velocity[i];
    scale_gen[n + i] = gamma.velocity[i];
  }
  return {std::move(shift_gen), std::move(scale_gen)};
}

/// The orbit tangent space itself; two-dimensional for every geodesic since
/// (V,0) and (0,V) are independent whenever V ≠ 0.
template <ScalarType S>
Subspace<S> orbit_tangent_space(const Geodesic<S>& gamma) {
  const auto [t, s] = orbit_tangent_frame(gamma);
  return Subspace<S>::span(2 * gamma.dim(), std::vector<Vec<S>>{t, s});
}

/// Value of ω on the (scale, shift) generator pair — the single coefficient
/// of the form pulled back to the group through the orbit map. Equals g(V,V):
/// orbits through non-null geodesics are symplectic surfaces, orbits through
/// null ones are isotropic.
template <ScalarType S>
S orbit_pullback(const Metric& g, const Geodesic<S>& gamma) {
  const auto [shift_gen, scale_gen] = orbit_tangent_frame(gamma);
  return omega_eval(g, PhaseTangent<S>::from_flat(scale_gen),
                    PhaseTangent<S>::from_flat(shift_gen));
}

/// Gram matrix of ω restricted to the orbit frame (shift, scale):
/// [[0, −g(V,V)], [g(V,V), 0]]. Rank 2 off the null stratum, rank 0 on it —
/// the restriction of ω to an orbit is either symplectic or identically zero.
template <ScalarType S>
Mat<S> orbit_gram(const Metric& g, const Geodesic<S>& gamma) {
  const auto [t, s] = orbit_tangent_frame(gamma);
  const PhaseTangent<S> xt = PhaseTangent<S>::from_flat(t);
  const PhaseTangent<S> xs = PhaseTangent<S>::from_flat(s);
  Mat<S> gram(2, 2);
  gram(0, 1) = omega_eval(g, xt, xs);
  gram(1, 0) = omega_eval(g, xs, xt);
  return gram;
}

/// ω-orthogonal of the orbit tangent space: the candidate horizontal
/// distribution. Dimension 2n−2 always; contains the orbit exactly on the
/// null stratum.
template <ScalarType S>
Subspace<S> orbit_symplectic_orthogonal(const Metric& g, const Geodesic<S>& gamma) {
  return symplectic_orthogonal(orbit_tangent_space(gamma), omega_matrix<S>(g));
}

/// Map a covector through the inverse pairing: the unique ζ with
/// ω(ζ, ·) = α, i.e. ζ = −Ω⁻¹ α (since ω(ζ,u) = ζ^T Ω u and Ω^T = −Ω).
template <ScalarType S>
Vec<S> omega_raise(const Metric& g, const Vec<S>& alpha) {
  if (alpha.dim() != 2 * g.dim())
    throw std::invalid_argument("omega_raise: covector dimension mismatch");
  return S(-1) * (omega_inverse_matrix<S>(g) * alpha);
}

/// ω-orthogonal computed by the independent annihilator route:
/// Orth_ω(W) = ω⁻¹(W°), raising each annihilator covector through Ω⁻¹.
template <ScalarType S>
Subspace<S> symplectic_orthogonal_via_annihilator(const Metric& g, const Subspace<S>& w) {
  if (w.ambient_dim() != 2 * g.dim())
    throw std::invalid_argument("symplectic_orthogonal_via_annihilator: ambient mismatch");
  const Subspace<S> ann = annihilator(w);
  std::vector<Vec<S>> raised;
  for (const Vec<S>& a : ann.basis()) raised.push_back(omega_raise(g, a));
  return Subspace<S>::span(w.ambient_dim(), raised);
}

}  // namespace cosym
