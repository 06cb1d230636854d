#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cosym/action.hpp"

namespace cosym {

/// The two families of rational gauge sections through which the space of
/// unparametrized geodesics is charted:
///  - NonNullAxis(i, ±): for non-null geodesics with V_i of the given sign;
///    gauge V_i = sign and g(V, X) = 0.
///  - NullTimeSlice(±): Lorentzian signatures only; for null geodesics with
///    time component of the given sign; gauge V_time = sign and X_time = 0,
///    with the unit spatial direction parametrized stereographically.
/// Both gauge solves are rational, so the whole atlas works in exact
/// arithmetic; there is no unit-speed normalization anywhere in the atlas.
enum class ChartKind { NonNullAxis, NullTimeSlice };

struct GaugeChart {
  ChartKind kind;
  std::size_t axis;  // pivot coordinate for NonNullAxis; ignored otherwise
  int sign;          // +1 or -1

  static GaugeChart non_null_axis(std::size_t axis, int sign) {
    return GaugeChart{ChartKind::NonNullAxis, axis, sign};
  }
  static GaugeChart null_time_slice(int sign) {
    return GaugeChart{ChartKind::NullTimeSlice, 0, sign};
  }

  friend bool operator==(const GaugeChart& a, const GaugeChart& b) {
    if (a.kind != b.kind || a.sign != b.sign) return false;
    return a.kind == ChartKind::NullTimeSlice || a.axis == b.axis;
  }
};

/// Human-readable chart name; coordinate axes are shown 1-based.
inline std::string label(const GaugeChart& c) {
  const char s = c.sign > 0 ? '+' : '-';
  if (c.kind == ChartKind::NonNullAxis)
    return "NonNullAxis(" + std::to_string(c.axis + 1) + "," + s + ")";
  return std::string("NullTimeSlice(") + s + ")";
}

inline void validate_chart(const Metric& g, const GaugeChart& c) {
  if (c.sign != 1 && c.sign != -1)
    throw std::invalid_argument("GaugeChart: sign must be +1 or -1");
  if (c.kind == ChartKind::NonNullAxis) {
    if (c.axis >= g.dim())
      throw std::invalid_argument("GaugeChart: axis out of range");
  } else {
    if (g.minus() != 1 || g.plus() < 2)
      throw std::invalid_argument(
          "GaugeChart: null time-slice charts need signature (p,1) with p >= 2");
  }
}

/// Every chart available for the given signature: 2n non-null charts, plus
/// the two null charts when the signature is Lorentzian with p >= 2.
inline std::vector<GaugeChart> atlas(const Metric& g) {
  std::vector<GaugeChart> out;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (int s : {1, -1}) out.push_back(GaugeChart::non_null_axis(i, s));
  if (g.minus() == 1 && g.plus() >= 2)
    for (int s : {1, -1}) out.push_back(GaugeChart::null_time_slice(s));
  return out;
}

/// Intrinsic dimension: 2n−2 for non-null charts, 2n−3 for null charts.
inline std::size_t chart_dim(const Metric& g, const GaugeChart& c) {
  validate_chart(g, c);
  return c.kind == ChartKind::NonNullAxis ? 2 * g.dim() - 2 : 2 * g.dim() - 3;
}

// ---------------------------------------------------------------------------
// Stereographic parametrization of the unit sphere in R^p, projecting from
// the pole +e_p. Rational in, rational out — this is what keeps null
// directions inside exact arithmetic.
// ---------------------------------------------------------------------------

/// u ∈ R^{p−1} ↦ (2u, |u|²−1)/(|u|²+1) ∈ S^{p−1} ⊂ R^p. Never hits the pole.
template <ScalarType S>
Vec<S> sphere_from_plane(const Vec<S>& u) {
  const std::size_t m = u.dim();
  S nsq(0);
  for (std::size_t k = 0; k < m; ++k) nsq = nsq + u[k] * u[k];
  const S denom = nsq + S(1);
  Vec<S> v(m + 1);
  for (std::size_t k = 0; k < m; ++k) v[k] = S(2) * u[k] / denom;
  v[m] = (nsq - S(1)) / denom;
  return v;
}

/// Inverse: unit vector v ↦ (v_1..v_{p−1})/(1 − v_p). The pole itself has no
/// preimage and is rejected.
template <ScalarType S>
Vec<S> plane_from_sphere(const Vec<S>& v) {
  const std::size_t p = v.dim();
  if (p < 2) throw std::invalid_argument("plane_from_sphere: need ambient dim >= 2");
  const S denom = S(1) - v[p - 1];
  if (scalar_traits<S>::is_zero(denom))
    throw std::domain_error("plane_from_sphere: the projection pole has no plane image");
  Vec<S> u(p - 1);
  for (std::size_t k = 0; k < p - 1; ++k) u[k] = v[k] / denom;
  return u;
}

/// Differential of sphere_from_plane at u: the p × (p−1) Jacobian with
///   ∂v_j/∂u_k = 2δ_jk/D − 4u_j u_k/D²,   ∂v_p/∂u_k = 4u_k/D²,  D = |u|²+1.
template <ScalarType S>
Mat<S> sphere_from_plane_jacobian(const Vec<S>& u) {
  const std::size_t m = u.dim();
  S nsq(0);
  for (std::size_t k = 0; k < m; ++k) nsq = nsq + u[k] * u[k];
  const S d = nsq + S(1);
  const S d2 = d * d;
  Mat<S> j(m + 1, m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t row = 0; row < m; ++row)
      j(row, k) = (row == k ? S(2) / d : S(0)) - S(4) * u[row] * u[k] / d2;
    j(m, k) = S(4) * u[k] / d2;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Gauge fixing.
// ---------------------------------------------------------------------------

/// A trajectory point: the chart it lives in, the unique gauge-fixed
/// representative on that chart's section, and its intrinsic coordinates.
/// Non-null coordinate order: (V_j : j ≠ axis) then (X_j : j ≠ axis), both in
/// increasing j. Null coordinate order: (u_1..u_{p−1}) then (X_1..X_p).
template <ScalarType S>
struct ChartPoint {
  GaugeChart chart;
  Geodesic<S> representative;
  Vec<S> coords;
};

/// Does the chart's domain contain this geodesic?
template <ScalarType S>
bool chart_admits(const Metric& g, const GaugeChart& c, const Geodesic<S>& gamma) {
  validate_chart(g, c);
  if (gamma.dim() != g.dim())
    throw std::invalid_argument("chart_admits: dimension mismatch");
  const Vec<S>& v = gamma.velocity;
  if (c.kind == ChartKind::NonNullAxis) {
    if (g.classify(v) == CausalKind::Null) return false;
    return scalar_traits<S>::sign(v[c.axis]) == c.sign;
  }
  if (g.classify(v) != CausalKind::Null) return false;
  const std::size_t time = g.dim() - 1;
  if (scalar_traits<S>::sign(v[time]) != c.sign) return false;
  // The normalized spatial direction must avoid the stereographic pole.
  const S a = S(c.sign) / v[time];
  bool at_pole = true;
  for (std::size_t j = 0; j + 1 < time && at_pole; ++j)
    if (!scalar_traits<S>::is_zero(v[j])) at_pole = false;
  if (at_pole && !scalar_traits<S>::equal(a * v[time - 1], S(1))) at_pole = false;
  return !at_pole;
}

/// The unique reparametrization carrying gamma onto the chart's section.
template <ScalarType S>
AffineReparam<S> gauge_reparam(const Metric& g, const GaugeChart& c, const Geodesic<S>& gamma) {
  if (!chart_admits(g, c, gamma))
    throw std::domain_error("gauge_reparam: geodesic outside the domain of " + label(c));
  const Vec<S>& v = gamma.velocity;
  if (c.kind == ChartKind::NonNullAxis) {
    const S a = S(c.sign) / v[c.axis];
    const S b = -g.inner(v, gamma.position) / g.norm_sq(v);
    return AffineReparam<S>(a, b);
  }
  const std::size_t time = g.dim() - 1;
  const S a = S(c.sign) / v[time];
  const S b = -gamma.position[time] / v[time];
  return AffineReparam<S>(a, b);
}

namespace detail {

/// Verify the section equations on a candidate representative.
template <ScalarType S>
bool on_section(const Metric& g, const GaugeChart& c, const Geodesic<S>& rep) {
  const Vec<S>& v = rep.velocity;
  if (c.kind == ChartKind::NonNullAxis)
    return scalar_traits<S>::equal(v[c.axis], S(c.sign)) &&
           scalar_traits<S>::is_zero(g.inner(v, rep.position));
  const std::size_t time = g.dim() - 1;
  return scalar_traits<S>::equal(v[time], S(c.sign)) &&
         scalar_traits<S>::is_zero(rep.position[time]) &&
         scalar_traits<S>::is_zero(g.norm_sq(v));
}

}  // namespace detail

/// Intrinsic chart coordinates of a geodesic already lying on the section.
template <ScalarType S>
Vec<S> chart_coords_of(const Metric& g, const GaugeChart& c, const Geodesic<S>& rep) {
  validate_chart(g, c);
  if (!detail::on_section(g, c, rep))
    throw std::invalid_argument("chart_coords_of: geodesic is not on the section of " + label(c));
  const std::size_t n = g.dim();
  Vec<S> coords(chart_dim(g, c));
  std::size_t w = 0;
  if (c.kind == ChartKind::NonNullAxis) {
    for (std::size_t j = 0; j < n; ++j)
      if (j != c.axis) coords[w++] = rep.velocity[j];
    for (std::size_t j = 0; j < n; ++j)
      if (j != c.axis) coords[w++] = rep.position[j];
    return coords;
  }
  Vec<S> spatial(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) spatial[j] = rep.velocity[j];
  const Vec<S> u = plane_from_sphere(spatial);
  for (std::size_t k = 0; k < u.dim(); ++k) coords[w++] = u[k];
  for (std::size_t j = 0; j + 1 < n; ++j) coords[w++] = rep.position[j];
  return coords;
}

/// Parametrize the section: coordinates back to a geodesic on it.
template <ScalarType S>
Geodesic<S> chart_embed(const Metric& g, const GaugeChart& c, const Vec<S>& coords) {
  validate_chart(g, c);
  if (coords.dim() != chart_dim(g, c))
    throw std::invalid_argument("chart_embed: coordinate dimension mismatch");
  const std::size_t n = g.dim();
  Vec<S> x(n), v(n);
  if (c.kind == ChartKind::NonNullAxis) {
    std::size_t r = 0;
    v[c.axis] = S(c.sign);
    for (std::size_t j = 0; j < n; ++j)
      if (j != c.axis) v[j] = coords[r++];
    for (std::size_t j = 0; j < n; ++j)
      if (j != c.axis) x[j] = coords[r++];
    S cross(0);
    for (std::size_t j = 0; j < n; ++j)
      if (j != c.axis) cross = cross + S(g.diag_sign(j)) * v[j] * x[j];
    x[c.axis] = -cross / (S(g.diag_sign(c.axis)) * S(c.sign));
    Geodesic<S> rep(std::move(x), std::move(v));
    if (g.classify(rep.velocity) == CausalKind::Null)
      throw std::domain_error("chart_embed: coordinates give a null velocity in a non-null chart");
    return rep;
  }
  Vec<S> u(n - 2);
  for (std::size_t k = 0; k + 2 < n; ++k) u[k] = coords[k];
  const Vec<S> dir = sphere_from_plane(u);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    v[j] = dir[j];
    x[j] = coords[(n - 2) + j];
  }
  v[n - 1] = S(c.sign);
  return Geodesic<S>(std::move(x), std::move(v));
}

/// Gauge-fix a geodesic into the chart: act by gauge_reparam, then read off
/// the coordinates. Idempotent on points already on the section.
template <ScalarType S>
ChartPoint<S> gauge_fix(const Metric& g, const GaugeChart& c, const Geodesic<S>& gamma) {
  const Geodesic<S> rep = act(gauge_reparam(g, c, gamma), gamma);
  if (!detail::on_section(g, c, rep))
    throw verification_error("gauge_fix: representative missed the section of " + label(c));
  return ChartPoint<S>{c, rep, chart_coords_of(g, c, rep)};
}

/// Differentials of chart_embed at the point: one phase tangent per intrinsic
/// coordinate, spanning the tangent space of the section.
template <ScalarType S>
std::vector<PhaseTangent<S>> chart_tangent_basis(const Metric& g, const ChartPoint<S>& cp) {
  const GaugeChart& c = cp.chart;
  validate_chart(g, c);
  const std::size_t n = g.dim();
  const Geodesic<S>& rep = cp.representative;
  std::vector<PhaseTangent<S>> basis;
  basis.reserve(chart_dim(g, c));
  if (c.kind == ChartKind::NonNullAxis) {
    const S pivot = S(g.diag_sign(c.axis)) * S(c.sign);
    // Velocity directions: moving v_j drags the dependent x_axis entry.
    for (std::size_t j = 0; j < n; ++j) {
      if (j == c.axis) continue;
      Vec<S> dx(n), dv(n);
      dv[j] = S(1);
      dx[c.axis] = -S(g.diag_sign(j)) * rep.position[j] / pivot;
      basis.emplace_back(std::move(dx), std::move(dv));
    }
    // Position directions.
    for (std::size_t j = 0; j < n; ++j) {
      if (j == c.axis) continue;
      Vec<S> dx(n), dv(n);
      dx[j] = S(1);
      dx[c.axis] = -S(g.diag_sign(j)) * rep.velocity[j] / pivot;
      basis.emplace_back(std::move(dx), std::move(dv));
    }
    return basis;
  }
  Vec<S> u(n - 2);
  for (std::size_t k = 0; k + 2 < n; ++k) u[k] = cp.coords[k];
  const Mat<S> jac = sphere_from_plane_jacobian(u);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    Vec<S> dx(n), dv(n);
    for (std::size_t j = 0; j + 1 < n; ++j) dv[j] = jac(j, k);
    basis.emplace_back(std::move(dx), std::move(dv));
  }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    Vec<S> dx(n), dv(n);
    dx[j] = S(1);
    basis.emplace_back(std::move(dx), std::move(dv));
  }
  return basis;
}

/// Canonical chart choice: null geodesics go to the time-slice chart of their
/// time orientation; non-null geodesics to the axis chart of their largest
/// velocity component (lowest index on ties).
template <ScalarType S>
GaugeChart choose_chart(const Metric& g, const Geodesic<S>& gamma) {
  const Vec<S>& v = gamma.velocity;
  if (g.classify(v) == CausalKind::Null) {
    if (g.minus() != 1 || g.plus() < 2)
      throw std::domain_error("choose_chart: no null charts for this signature");
    const GaugeChart c = GaugeChart::null_time_slice(scalar_traits<S>::sign(v[g.dim() - 1]));
    if (!chart_admits(g, c, gamma))
      throw std::domain_error("choose_chart: null direction at the stereographic pole");
    return c;
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < g.dim(); ++i)
    if (scalar_traits<S>::abs(v[best]) < scalar_traits<S>::abs(v[i])) best = i;
  return GaugeChart::non_null_axis(best, scalar_traits<S>::sign(v[best]));
}

}  // namespace cosym
