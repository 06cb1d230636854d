#include "cosym/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cosym/contact.hpp"
#include "cosym/sampler.hpp"

namespace cosym {
namespace {

// ---------------------------------------------------------------------------
// Input formatting for counterexample records. Geodesics use the same
// "x1,..,xn;v1,..,vn" syntax the inspect command accepts, so every recorded
// failure is replayable as-is.
// ---------------------------------------------------------------------------

std::string fmt(const Rat& x) { return format_rational(x); }

template <class S>
std::string fmt_list(const Vec<S>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ",";
    out += fmt(v[i]);
  }
  return out;
}

template <class S>
std::string fmt_geodesic(const Geodesic<S>& g) {
  return fmt_list(g.position) + ";" + fmt_list(g.velocity);
}

template <class S>
std::string fmt_reparam(const AffineReparam<S>& phi) {
  return fmt(phi.scale) + "," + fmt(phi.shift);
}

// ---------------------------------------------------------------------------
// Scalar conversion: all sampling happens over exact rationals so both modes
// see the same points; float mode converts after the draw.
// ---------------------------------------------------------------------------

template <class S>
Vec<S> to_scalar(const Vec<Rat>& v) {
  Vec<S> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = scalar_from<S>(v[i]);
  return out;
}

template <class S>
Geodesic<S> to_scalar(const Geodesic<Rat>& g) {
  return Geodesic<S>(to_scalar<S>(g.position), to_scalar<S>(g.velocity));
}

template <class S>
AffineReparam<S> to_scalar(const AffineReparam<Rat>& phi) {
  return AffineReparam<S>(scalar_from<S>(phi.scale), scalar_from<S>(phi.shift));
}

using Inputs = std::map<std::string, std::string>;

/// Counts a named check, trapping verification errors as failures and
/// recording the first counterexample with its inputs.
class Recorder {
 public:
  explicit Recorder(SuiteResult& result) : r_(result) {}

  template <class F>
  void check(std::string_view name, Inputs inputs, F&& body) {
    ++r_.checks_attempted;
    bool ok = false;
    std::string message;
    try {
      ok = body();
    } catch (const verification_error& e) {
      message = e.what();
    } catch (const std::exception& e) {
      message = std::string("unexpected error: ") + e.what();
    }
    if (ok) {
      ++r_.checks_passed;
      return;
    }
    if (!r_.first_failure)
      r_.first_failure =
          CheckFailure{std::string(name), std::move(inputs), std::move(message)};
  }

 private:
  SuiteResult& r_;
};

template <class S>
bool eq(const S& a, const S& b) {
  return scalar_traits<S>::equal(a, b);
}

// ---------------------------------------------------------------------------
// phase: the symplectic pairing, its matrix, the tautological form, the
// extended-space kernel, and the annihilator identity.
// ---------------------------------------------------------------------------

/// Tautological form as a function of the flat phase point, for the
/// exterior-derivative checks.
template <class S>
S tautological_at(const Metric& g, const Vec<S>& z, const PhaseTangent<S>& t) {
  const std::size_t n = g.dim();
  Vec<S> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = z[n + i];
  return g.inner(v, t.dx);
}

template <class S>
void phase_suite(const Metric& g, const RunConfig& cfg, Recorder& rec) {
  Sampler smp(cfg.seed, "phase");
  const std::size_t n = g.dim();
  const Mat<S> omega = omega_matrix<S>(g);
  const Mat<S> omega_inv = omega_inverse_matrix<S>(g);

  rec.check("form-matrix-inverse", {}, [&] {
    return omega * omega_inv == Mat<S>::identity(2 * n);
  });
  rec.check("form-matrix-antisymmetric", {}, [&] { return omega.is_antisymmetric(); });
  if (g.plus() == 3 && g.minus() == 1)
    rec.check("form-matrix-determinant", {}, [&] { return eq(determinant(omega), S(1)); });

  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const Vec<Rat> ra = smp.vector(2 * n);
    const Vec<Rat> rb = smp.vector(2 * n);
    const Geodesic<Rat> rgamma = smp.geodesic(g);
    const PhaseTangent<S> a = PhaseTangent<S>::from_flat(to_scalar<S>(ra));
    const PhaseTangent<S> b = PhaseTangent<S>::from_flat(to_scalar<S>(rb));
    const Geodesic<S> gamma = to_scalar<S>(rgamma);
    const Inputs in{{"a", fmt_list(ra)}, {"b", fmt_list(rb)}, {"gamma", fmt_geodesic(rgamma)}};

    rec.check("omega-antisymmetry", in,
              [&] { return eq(omega_eval(g, a, b), -omega_eval(g, b, a)); });
    rec.check("omega-matrix-agreement", in, [&] {
      const Vec<S> ob = omega * b.flat();
      S acc(0);
      for (std::size_t k = 0; k < 2 * n; ++k) acc = acc + a.flat()[k] * ob[k];
      return eq(acc, omega_eval(g, a, b));
    });
    rec.check("tautological-derivative-is-omega", in, [&] {
      const Vec<S> z = gamma.phase_coords();
      if constexpr (scalar_traits<S>::is_exact) {
        // The form has linear coefficients, so unit-step differences compute
        // the exterior derivative exactly.
        const S da = tautological_at(g, z + a.flat(), b) - tautological_at(g, z, b);
        const S db = tautological_at(g, z + b.flat(), a) - tautological_at(g, z, a);
        return eq(da - db, omega_eval(g, a, b));
      } else {
        const S h = S(std::ldexp(1.0, -20));
        const S da = (tautological_at(g, z + h * a.flat(), b) -
                      tautological_at(g, z - h * a.flat(), b)) /
                     (S(2) * h);
        const S db = (tautological_at(g, z + h * b.flat(), a) -
                      tautological_at(g, z - h * b.flat(), a)) /
                     (S(2) * h);
        return eq(da - db, omega_eval(g, a, b));
      }
    });

    const Rat rt = smp.rational();
    const ExtendedPoint<S> y(to_scalar<S>(rgamma.position), to_scalar<S>(rgamma.velocity),
                             scalar_from<S>(rt));
    rec.check("extended-kernel-is-flow-line", in, [&] {
      const Subspace<S> ker = extended_form_kernel(g, y);
      if (ker.dim() != 1) return false;
      Vec<S> lifted(2 * n + 1);
      for (std::size_t k = 0; k < n; ++k) lifted[k] = y.v[k];
      lifted[2 * n] = S(1);
      return ker.contains(lifted);
    });

    const std::size_t wdim = 1 + i % 4;
    std::vector<Vec<S>> gens;
    for (std::size_t k = 0; k < wdim; ++k) gens.push_back(to_scalar<S>(smp.vector(2 * n)));
    const Subspace<S> w = Subspace<S>::span(2 * n, gens);
    const Inputs win{{"subspace_dim", std::to_string(w.dim())}};
    rec.check("orthogonal-via-annihilator-agreement", win, [&] {
      return symplectic_orthogonal_via_annihilator(g, w) == symplectic_orthogonal(w, omega);
    });
    rec.check("double-annihilator-identity", win,
              [&] { return annihilator(annihilator(w)) == w; });
    rec.check("orthogonal-dimension", win, [&] {
      return symplectic_orthogonal(w, omega).dim() + w.dim() == 2 * n;
    });
  }
}

// ---------------------------------------------------------------------------
// action: group axioms, the scaling laws for the form and its inverse, and
// the differential's determinant.
// ---------------------------------------------------------------------------

template <class S>
void action_suite(const Metric& g, const RunConfig& cfg, Recorder& rec) {
  Sampler smp(cfg.seed, "action");
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const AffineReparam<Rat> rphi = smp.reparam();
    const AffineReparam<Rat> rpsi = smp.reparam();
    const Geodesic<Rat> rgamma = smp.geodesic(g);
    const AffineReparam<S> phi = to_scalar<S>(rphi);
    const AffineReparam<S> psi = to_scalar<S>(rpsi);
    const Geodesic<S> gamma = to_scalar<S>(rgamma);
    const Inputs in{{"phi", fmt_reparam(rphi)},
                    {"psi", fmt_reparam(rpsi)},
                    {"gamma", fmt_geodesic(rgamma)}};

    rec.check("act-identity", in,
              [&] { return act(AffineReparam<S>::identity(), gamma) == gamma; });
    rec.check("act-composition", in, [&] {
      return act(psi, act(phi, gamma)) == act(compose(psi, phi), gamma);
    });
    rec.check("act-inverse", in,
              [&] { return act(group_inverse(phi), act(phi, gamma)) == gamma; });
    rec.check("act-freeness", in,
              [&] { return phi.is_identity() || !(act(phi, gamma) == gamma); });
    rec.check("pullback-scaling", in,
              [&] { return eq(pullback_scale_factor(g, phi), phi.scale); });
    rec.check("pushforward-scaling", in,
              [&] { return eq(pushforward_scale_factor(g, phi), phi.scale); });
    rec.check("scaling-factors-agree", in, [&] {
      return eq(pullback_scale_factor(g, phi), pushforward_scale_factor(g, phi));
    });
    rec.check("differential-determinant", in, [&] {
      S expected(1);
      for (std::size_t k = 0; k < n; ++k) expected = expected * phi.scale;
      return eq(determinant(action_differential(phi, n)), expected);
    });
  }
}

// ---------------------------------------------------------------------------
// orbits: the pullback value, the rank dichotomy, and the decomposition /
// isotropy alternative for the horizontal space.
// ---------------------------------------------------------------------------

template <class S>
void orbits_suite(const Metric& g, const RunConfig& cfg, Recorder& rec) {
  Sampler smp(cfg.seed, "orbits");
  const std::size_t n = g.dim();
  const CausalKind kinds[3] = {CausalKind::SpaceLike, CausalKind::TimeLike, CausalKind::Null};
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const CausalKind kind = kinds[i % 3];
    const Geodesic<Rat> rgamma = smp.geodesic_of_kind(g, kind);
    const Geodesic<S> gamma = to_scalar<S>(rgamma);
    const bool null = kind == CausalKind::Null;
    const Inputs in{{"gamma", fmt_geodesic(rgamma)}, {"kind", to_string(kind)}};

    rec.check("orbit-pullback-is-energy", in, [&] {
      const S val = orbit_pullback(g, gamma);
      if (!eq(val, g.norm_sq(gamma.velocity))) return false;
      return !null || scalar_traits<S>::is_zero(val);
    });
    rec.check("orbit-gram-rank-dichotomy", in, [&] {
      return rank(orbit_gram(g, gamma)) == (null ? 0u : 2u);
    });
    rec.check("orbit-dimension", in,
              [&] { return orbit_tangent_space(gamma).dim() == 2; });
    const Subspace<S> f = orbit_symplectic_orthogonal(g, gamma);
    rec.check("horizontal-dimension", in, [&] { return f.dim() == 2 * n - 2; });
    if (null) {
      rec.check("orbit-isotropic-inclusion", in,
                [&] { return f.contains(orbit_tangent_space(gamma)); });
    } else {
      rec.check("orbit-horizontal-decomposition", in, [&] {
        const Subspace<S> orbit = orbit_tangent_space(gamma);
        return intersect(f, orbit).dim() == 0 &&
               subspace_sum(f, orbit) == Subspace<S>::full(2 * n);
      });
    }
  }
}

// ---------------------------------------------------------------------------
// quotient: gauge fixing, the chart projection, sigma and its invariants.
// ---------------------------------------------------------------------------

template <class S>
bool section_equations_hold(const Metric& g, const GaugeChart& c, const Geodesic<S>& rep) {
  if (c.kind == ChartKind::NonNullAxis)
    return eq(rep.velocity[c.axis], S(c.sign)) &&
           scalar_traits<S>::is_zero(g.inner(rep.velocity, rep.position));
  const std::size_t time = g.dim() - 1;
  return eq(rep.velocity[time], S(c.sign)) &&
         scalar_traits<S>::is_zero(rep.position[time]) &&
         scalar_traits<S>::is_zero(g.norm_sq(rep.velocity));
}

template <class S>
void quotient_suite(const Metric& g, const RunConfig& cfg, Recorder& rec) {
  Sampler smp(cfg.seed, "quotient");
  const std::vector<GaugeChart> charts = atlas(g);
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const GaugeChart chart = charts[i % charts.size()];
    const bool null_chart = chart.kind == ChartKind::NullTimeSlice;
    const Geodesic<Rat> rgamma = smp.chart_geodesic(g, chart);
    const AffineReparam<Rat> rphi = smp.reparam();
    const Geodesic<S> gamma = to_scalar<S>(rgamma);
    const AffineReparam<S> phi = to_scalar<S>(rphi);
    const Inputs in{{"gamma", fmt_geodesic(rgamma)},
                    {"phi", fmt_reparam(rphi)},
                    {"chart", label(chart)}};

    const ChartPoint<S> cp = gauge_fix(g, chart, gamma);
    rec.check("gauge-section-equations", in,
              [&] { return section_equations_hold(g, chart, cp.representative); });
    rec.check("gauge-idempotence", in, [&] {
      const ChartPoint<S> again = gauge_fix(g, chart, cp.representative);
      return again.representative == cp.representative && again.coords == cp.coords;
    });
    rec.check("gauge-invariance", in, [&] {
      const ChartPoint<S> other = gauge_fix(g, chart, act(phi, gamma));
      return other.representative == cp.representative && other.coords == cp.coords;
    });
    rec.check("embed-roundtrip", in, [&] {
      return chart_embed(g, chart, cp.coords) == cp.representative;
    });

    const std::size_t m = chart_dim(g, chart);
    const std::vector<PhaseTangent<S>> basis = chart_tangent_basis(g, cp);
    const auto [xi_t, xi_s] = orbit_tangent_frame(cp.representative);
    rec.check("projection-kills-orbit", in, [&] {
      return project_to_chart(g, cp, PhaseTangent<S>::from_flat(xi_t)).is_zero() &&
             project_to_chart(g, cp, PhaseTangent<S>::from_flat(xi_s)).is_zero();
    });
    rec.check("projection-recovers-coefficients", in, [&] {
      // A decomposable vector with known section coefficients: the projection
      // must return exactly those, killing the orbit part.
      Vec<S> combo(2 * n);
      Vec<S> expected(m);
      for (std::size_t j = 0; j < m; ++j) {
        expected[j] = scalar_from<S>(smp.rational());
        combo = combo + expected[j] * basis[j].flat();
      }
      combo = combo + scalar_from<S>(smp.rational()) * xi_t +
              scalar_from<S>(smp.rational()) * xi_s;
      return project_to_chart(g, cp, PhaseTangent<S>::from_flat(combo)) == expected;
    });

    try {
      const QuotientStructure<S> qs = compute_sigma(g, cp);
      rec.check("sigma-antisymmetric", in, [&] { return qs.sigma.is_antisymmetric(); });
      rec.check("sigma-rank", in, [&] {
        return qs.sigma_rank == (null_chart ? m - 1 : m);
      });
      rec.check("sigma-image-is-distribution", in, [&] {
        return column_space(qs.sigma) == qs.f_down;
      });
      rec.check("horizontal-image-dimension", in, [&] {
        return qs.f_up.dim() == 2 * n - 2 && qs.f_down.dim() == qs.sigma_rank;
      });
      if (!null_chart) {
        rec.check("sigma-inverse-symplectic", in, [&] {
          const Mat<S> inv = symplectic_inverse_on_massive(qs);
          return inv.is_antisymmetric() && qs.sigma * inv == Mat<S>::identity(m);
        });
      }
    } catch (const verification_error& e) {
      rec.check("sigma-construction", in, [&]() -> bool { throw; });
    }

    rec.check("conformal-factor-is-scale", in,
              [&] { return eq(check_conformal_class(g, cp, phi), phi.scale); });

    if (!null_chart) {
      // A second chart whose domain contains the same trajectory, when one
      // exists, must produce a sigma in the same ray.
      for (std::size_t axis = 0; axis < n; ++axis) {
        const int s = scalar_traits<S>::sign(gamma.velocity[axis]);
        if (s == 0) continue;
        const GaugeChart other = GaugeChart::non_null_axis(axis, s);
        if (other == chart) continue;
        rec.check("chart-overlap-congruence", in, [&] {
          const ChartPoint<S> cp2 = gauge_fix(g, other, gamma);
          const S factor = chart_overlap_factor(g, cp, cp2);
          // The transition scale a is fixed by the two representatives; the
          // congruence factor must be its reciprocal, positive in particular.
          const S a = cp2.representative.velocity[chart.axis] /
                      cp.representative.velocity[chart.axis];
          return scalar_traits<S>::sign(factor) > 0 && eq(factor * a, S(1));
        });
        break;
      }
    }

    if constexpr (!scalar_traits<S>::is_exact) {
      if (!null_chart) {
        rec.check("unit-speed-gauge-cross-check", in, [&] {
          // The irrational unit-speed normalization only exists in float
          // mode; the conformal factor through it must match the rescaling.
          const double h = std::fabs(g.norm_sq(cp.representative.velocity));
          const double au = 1.0 / std::sqrt(h);
          return eq(check_conformal_class(g, cp, AffineReparam<S>(au, 0.0)), au);
        });
      }
    }
  }
}

// ---------------------------------------------------------------------------
// contact: the induced 1-form on null charts and everything the contact
// property needs.
// ---------------------------------------------------------------------------

template <class S>
void contact_suite(const Metric& g, const RunConfig& cfg, Recorder& rec) {
  Sampler smp(cfg.seed, "contact");
  const std::size_t n = g.dim();
  const std::size_t m = 2 * n - 3;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const GaugeChart chart = GaugeChart::null_time_slice(i % 2 == 0 ? 1 : -1);
    const Geodesic<Rat> rgamma = smp.chart_geodesic(g, chart);
    const AffineReparam<Rat> rphi = smp.reparam();
    const Geodesic<S> gamma = to_scalar<S>(rgamma);
    const Inputs in{{"gamma", fmt_geodesic(rgamma)}, {"chart", label(chart)}};

    const ChartPoint<S> cp = gauge_fix(g, chart, gamma);
    try {
      const ContactData<S> cd = contact_data(g, cp);
      rec.check("contact-form-nonzero", in, [&] { return !cd.alpha.is_zero(); });
      rec.check("contact-form-sees-positions-only", in, [&] {
        for (std::size_t k = 0; k + 2 < n; ++k)
          if (!scalar_traits<S>::is_zero(cd.alpha[k])) return false;
        return true;
      });
      rec.check("contact-kernel-dimension", in, [&] { return cd.kernel.dim() == m - 1; });
      rec.check("contact-volume-nonzero", in,
                [&] { return !scalar_traits<S>::is_zero(cd.volume_value); });
      rec.check("contact-derivative-antisymmetric", in,
                [&] { return cd.d_alpha.is_antisymmetric(); });
      rec.check("contact-derivative-matches-form-restriction", in, [&] {
        // Independent route: dα on the section equals the Gram matrix of the
        // phase-space pairing over the chart tangent basis.
        const std::vector<PhaseTangent<S>> basis = chart_tangent_basis(g, cp);
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t c = 0; c < m; ++c)
            if (!eq(cd.d_alpha(r, c), omega_eval(g, basis[r], basis[c]))) return false;
        return true;
      });
      rec.check("contact-kernel-matches-distribution", in,
                [&] { return check_kernel_equals_distribution(g, cp); });
      rec.check("characteristic-intersection-trivial", in,
                [&] { return check_characteristic_triviality(g, cp); });
      rec.check("triviality-volume-equivalence", in, [&] {
        return check_characteristic_triviality(g, cp) ==
               !scalar_traits<S>::is_zero(cd.volume_value);
      });
      rec.check("flow-transverse-to-section", in,
                [&] { return flow_transverse_to_section(g, cp); });
      rec.check("volume-fiber-scaling", in, [&] {
        // Reading α through the fiber point act((a,b)) scales it by the
        // constant a, hence the volume by a^{n−1} — positive, never zero. The
        // comparison is on the volume ratio, which stays O(a^{n−1}) however
        // small the base volume gets, so float tolerances remain meaningful.
        const S a = scalar_from<S>(rphi.scale);
        const KForm<S> da = KForm<S>::from_antisymmetric_matrix(a * cd.d_alpha);
        KForm<S> vol = KForm<S>::from_covector(a * cd.alpha);
        S expected = a;
        for (std::size_t k = 0; 2 * k + 1 < m; ++k) {
          vol = wedge(vol, da);
          expected = expected * a;
        }
        const S ratio = vol.raw_coefficient(0) / cd.volume_value;
        return eq(ratio, expected) && !scalar_traits<S>::is_zero(ratio);
      });
      if constexpr (!scalar_traits<S>::is_exact) {
        rec.check("contact-derivative-finite-difference", in, [&] {
          const double h = std::ldexp(1.0, -20);
          const auto alpha_at = [&](const Vec<S>& coords) {
            const Geodesic<S> rep = chart_embed(g, chart, coords);
            return contact_form(g, ChartPoint<S>{chart, rep, coords});
          };
          for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = r + 1; c < m; ++c) {
              Vec<S> up = cp.coords, dn = cp.coords;
              up[r] = up[r] + h;
              dn[r] = dn[r] - h;
              const double dr = (alpha_at(up)[c] - alpha_at(dn)[c]) / (2 * h);
              up = cp.coords;
              dn = cp.coords;
              up[c] = up[c] + h;
              dn[c] = dn[c] - h;
              const double dc = (alpha_at(up)[r] - alpha_at(dn)[r]) / (2 * h);
              if (!eq(dr - dc, cd.d_alpha(r, c))) return false;
            }
          return true;
        });
      }
    } catch (const verification_error& e) {
      rec.check("contact-package", in, [&]() -> bool { throw; });
    }
  }
}

// ---------------------------------------------------------------------------
// audit: the dimension chain around the null stratum.
// ---------------------------------------------------------------------------

template <class S>
void audit_suite(const Metric& g, const RunConfig& cfg, Recorder& rec, SuiteResult& result) {
  Sampler smp(cfg.seed, "audit");
  const std::size_t n = g.dim();
  result.details["level_set_dim"] = static_cast<long>(2 * n - 1);
  result.details["reduced_dim"] = static_cast<long>(2 * n - 2);
  result.details["trajectory_dim"] = static_cast<long>(2 * n - 3);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const Geodesic<Rat> rnull = smp.null_geodesic(g, i % 2 == 0 ? 1 : -1);
    const Geodesic<Rat> rany = smp.geodesic(g);
    const Geodesic<S> gamma = to_scalar<S>(rnull);
    const Geodesic<S> other = to_scalar<S>(rany);
    const Inputs in{{"gamma", fmt_geodesic(rnull)}};

    rec.check("audit-dimension-triple", in, [&] {
      const ReductionAudit audit = reduction_dimension_audit(g, gamma);
      return audit == ReductionAudit{2 * n - 1, 2 * n - 2, 2 * n - 3};
    });
    rec.check("level-set-is-hypersurface", in, [&] {
      // Rank of the energy differential as a one-row matrix: the level set
      // H = const is a hypersurface of dimension 2n − 1.
      const Vec<S> dh = energy_differential(g, gamma);
      Mat<S> row(1, 2 * n);
      for (std::size_t k = 0; k < 2 * n; ++k) row(0, k) = dh[k];
      return rank(row) == 1;
    });
    rec.check("energy-differential-nonzero", {{"gamma", fmt_geodesic(rany)}}, [&] {
      return !energy_differential(g, other).is_zero();
    });
    rec.check("trajectory-chart-dimension", in, [&] {
      const ChartPoint<S> cp = gauge_fix(g, choose_chart(g, gamma), gamma);
      const std::vector<PhaseTangent<S>> basis = chart_tangent_basis(g, cp);
      std::vector<Vec<S>> flat;
      for (const PhaseTangent<S>& b : basis) flat.push_back(b.flat());
      return basis.size() == 2 * n - 3 &&
             Subspace<S>::span(2 * n, flat).dim() == 2 * n - 3;
    });
  }
}

template <class S>
SuiteResult run_one(const std::string& name, const Metric& g, const RunConfig& cfg) {
  SuiteResult result;
  result.name = name;
  Recorder rec(result);
  const auto start = std::chrono::steady_clock::now();
  if (name == "phase")
    phase_suite<S>(g, cfg, rec);
  else if (name == "action")
    action_suite<S>(g, cfg, rec);
  else if (name == "orbits")
    orbits_suite<S>(g, cfg, rec);
  else if (name == "quotient")
    quotient_suite<S>(g, cfg, rec);
  else if (name == "contact")
    contact_suite<S>(g, cfg, rec);
  else if (name == "audit")
    audit_suite<S>(g, cfg, rec, result);
  const auto stop = std::chrono::steady_clock::now();
  result.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return result;
}

template <class S>
Report run_all(const RunConfig& cfg) {
  const Metric g(cfg.plus, cfg.minus);
  Report report;
  report.config = cfg;
  std::vector<std::string> seen;
  for (const std::string& name : cfg.suites) {
    if (std::find(seen.begin(), seen.end(), name) != seen.end()) continue;
    seen.push_back(name);
    report.suites.push_back(run_one<S>(name, g, cfg));
  }
  return report;
}

}  // namespace

Report run_suites(const RunConfig& cfg) {
  validate(cfg);
  if (cfg.mode == ScalarMode::Float) {
    scalar_traits<double>::tolerance = cfg.tol;
    return run_all<double>(cfg);
  }
  return run_all<Rat>(cfg);
}

}  // namespace cosym
