#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>

#include "cosym/charts.hpp"

namespace cosym {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace detail

/// Deterministic rational sampler. Each named stream derives its own seed, so
/// suites can run in any order (or concurrently) without changing each
/// other's draws. Integer draws use plain modulo on the raw 64-bit stream —
/// the slight bias is irrelevant here and keeps results identical across
/// standard libraries. Components follow the pinned test distribution:
/// numerators in [−20, 20], denominators in [1, 10].
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::string_view stream)
      : rng_(detail::splitmix64(seed ^ detail::fnv1a(stream))) {}

  std::uint64_t next_u64() { return rng_(); }

  /// Uniform-ish integer in [lo, hi], inclusive.
  long int_in(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("Sampler::int_in: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next_u64() % span);
  }

  int coin_sign() { return next_u64() % 2 == 0 ? 1 : -1; }

  Rat rational() { return Rat(int_in(-20, 20), int_in(1, 10)); }
  Rat rational_nonzero() { return Rat(coin_sign() * int_in(1, 20), int_in(1, 10)); }
  Rat rational_positive() { return Rat(int_in(1, 20), int_in(1, 10)); }

  Vec<Rat> vector(std::size_t dim) {
    Vec<Rat> v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = rational();
    return v;
  }

  Vec<Rat> nonzero_vector(std::size_t dim) {
    for (int tries = 0; tries < 64; ++tries) {
      Vec<Rat> v = vector(dim);
      if (!v.is_zero()) return v;
    }
    throw std::logic_error("Sampler: could not draw a nonzero vector");
  }

  AffineReparam<Rat> reparam() { return AffineReparam<Rat>(rational_positive(), rational()); }

  /// Arbitrary geodesic: any nonzero velocity, any position. Draw order is
  /// sequenced explicitly so results do not depend on argument evaluation
  /// order.
  Geodesic<Rat> geodesic(const Metric& g) {
    Vec<Rat> x = vector(g.dim());
    Vec<Rat> v = nonzero_vector(g.dim());
    return Geodesic<Rat>(std::move(x), std::move(v));
  }

  /// Stereographic parameter in the same rational box as everything else,
  /// redrawn while |u|² is within 1/100 of 1: on that sphere the tangential
  /// block of the stereographic differential degenerates, and float runs
  /// could not resolve the rank decisions the suites make. Exact-decided, so
  /// both modes see identical draws.
  Vec<Rat> plane_point(std::size_t dim) {
    for (int tries = 0; tries < 4096; ++tries) {
      Vec<Rat> u = vector(dim);
      Rat nsq(0);
      for (std::size_t k = 0; k < dim; ++k) nsq += u[k] * u[k];
      if (scalar_traits<Rat>::abs(nsq - 1) >= kConeMargin) return u;
    }
    throw std::logic_error("Sampler: rejection sampling failed off the unit sphere");
  }

  /// Null geodesic sampled through the stereographic parametrization, so the
  /// null constraint holds exactly: V = λ·(v(u), s) with λ > 0 and s = ±1 the
  /// time orientation. Lorentzian signatures only.
  Geodesic<Rat> null_geodesic(const Metric& g, int time_sign) {
    if (g.minus() != 1 || g.plus() < 2)
      throw std::invalid_argument("Sampler: null sampling needs signature (p,1), p >= 2");
    const std::size_t n = g.dim();
    const Vec<Rat> dir = sphere_from_plane(plane_point(n - 2));
    const Rat lambda = rational_positive();
    Vec<Rat> v(n);
    for (std::size_t j = 0; j + 1 < n; ++j) v[j] = lambda * dir[j];
    v[n - 1] = lambda * Rat(time_sign);
    Vec<Rat> x = vector(n);
    return Geodesic<Rat>(std::move(x), std::move(v));
  }

  /// Geodesic of a requested causal class; space- and time-like cases by
  /// rejection (each has bulk probability in the sample box), null exactly.
  /// Non-null samples are kept a fixed margin away from the null cone
  /// (|g(V,V)| ≥ 1/100, decided exactly) so float runs classify them the same
  /// way exact runs do and see identical draws.
  Geodesic<Rat> geodesic_of_kind(const Metric& g, CausalKind kind) {
    if (kind == CausalKind::Null) return null_geodesic(g, coin_sign());
    for (int tries = 0; tries < 4096; ++tries) {
      Geodesic<Rat> gamma = geodesic(g);
      if (scalar_traits<Rat>::abs(g.norm_sq(gamma.velocity)) < kConeMargin) continue;
      if (g.classify(gamma.velocity) == kind) return gamma;
    }
    throw std::logic_error("Sampler: rejection sampling failed to hit the causal class");
  }

  /// Geodesic inside a given chart's domain, drawn as a randomly
  /// reparametrized point of the chart's section: box coordinates are
  /// embedded (rejecting velocities within the cone margin) and then pushed
  /// off the section by a random (a, b). Sampling this way keeps every gauge
  /// quantity the suites later recover — the scale, the shift, and the
  /// representative's entries — inside the box scale, which exact arithmetic
  /// would not need but float cross-checks do: a free draw of (X, V) can make
  /// the recovered shift g(V,X)/g(V,V) four orders larger than its inputs.
  Geodesic<Rat> chart_geodesic(const Metric& g, const GaugeChart& chart) {
    validate_chart(g, chart);
    if (chart.kind == ChartKind::NullTimeSlice) return null_geodesic(g, chart.sign);
    const std::size_t n = g.dim();
    for (int tries = 0; tries < 4096; ++tries) {
      Vec<Rat> coords = vector(2 * n - 2);
      // The leading n−1 coordinates are the free velocity components; check
      // the causal margin before embedding (the section has V_axis = ±1).
      Rat nsq(g.diag_sign(chart.axis));
      std::size_t w = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == chart.axis) continue;
        nsq += Rat(g.diag_sign(j)) * coords[w] * coords[w];
        ++w;
      }
      if (scalar_traits<Rat>::abs(nsq) < kConeMargin) continue;
      const AffineReparam<Rat> phi = reparam();
      return act(phi, chart_embed(g, chart, coords));
    }
    throw std::logic_error("Sampler: rejection sampling failed to land in the chart");
  }

  /// Chart geodesic with a prescribed non-null causal class.
  Geodesic<Rat> chart_geodesic_of_kind(const Metric& g, const GaugeChart& chart, CausalKind kind) {
    if (kind == CausalKind::Null)
      throw std::invalid_argument("Sampler: use the null chart overload for null samples");
    for (int tries = 0; tries < 4096; ++tries) {
      Geodesic<Rat> gamma = chart_geodesic(g, chart);
      if (g.classify(gamma.velocity) == kind) return gamma;
    }
    throw std::logic_error("Sampler: rejection sampling failed to hit the causal class");
  }

 private:
  /// Distance from the null cone below which non-null rejection samples are
  /// redrawn. Exact verification does not need it; it keeps |g(V,V)| far
  /// enough above any reasonable float tolerance that both scalar modes agree
  /// on every sample's causal class.
  static inline const Rat kConeMargin = Rat(1, 100);

  std::mt19937_64 rng_;
};

}  // namespace cosym
