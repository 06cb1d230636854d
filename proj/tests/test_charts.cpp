#include <doctest.h>

#include <cosym/charts.hpp>

#include "oracles.hpp"

using cosym::ChartKind;
using cosym::GaugeChart;
using cosym::Geodesic;
using cosym::Mat;
using cosym::Metric;
using cosym::Rat;
using cosym::Vec;
using oracle::rat;

namespace {

const Metric mink;

}  // namespace

TEST_CASE("the atlas lists ten charts for Minkowski signature") {
  const auto charts = cosym::atlas(mink);
  REQUIRE(charts.size() == 10);  // 2n axis charts + 2 null charts
  std::size_t axis = 0, null = 0;
  for (const auto& c : charts) {
    cosym::validate_chart(mink, c);
    (c.kind == ChartKind::NonNullAxis ? axis : null)++;
  }
  CHECK(axis == 8);
  CHECK(null == 2);
  CHECK(cosym::chart_dim(mink, GaugeChart::non_null_axis(0, 1)) == 6);
  CHECK(cosym::chart_dim(mink, GaugeChart::null_time_slice(-1)) == 5);
  // Non-Lorentzian signatures have no null charts.
  CHECK(cosym::atlas(Metric(2, 2)).size() == 8);
  CHECK_THROWS_AS(cosym::validate_chart(Metric(2, 2), GaugeChart::null_time_slice(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(cosym::validate_chart(mink, GaugeChart::non_null_axis(4, 1)),
                  std::invalid_argument);
  CHECK(cosym::label(GaugeChart::non_null_axis(3, 1)) == "NonNullAxis(4,+)");
  CHECK(cosym::label(GaugeChart::null_time_slice(-1)) == "NullTimeSlice(-)");
}

TEST_CASE("stereographic parametrization hits the unit sphere rationally") {
  const Vec<Rat> origin(2);
  CHECK(cosym::sphere_from_plane(origin) == Vec<Rat>{rat(0), rat(0), rat(-1)});
  CHECK(cosym::sphere_from_plane(Vec<Rat>{rat(1), rat(0)}) == Vec<Rat>{rat(1), rat(0), rat(0)});
  // Generic rational point stays on the sphere exactly.
  const Vec<Rat> u{rat(1, 2), rat(-1, 3)};
  const Vec<Rat> v = cosym::sphere_from_plane(u);
  CHECK(v == Vec<Rat>{rat(36, 49), rat(-24, 49), rat(-23, 49)});
  Rat nsq(0);
  for (std::size_t i = 0; i < 3; ++i) nsq += v[i] * v[i];
  CHECK(nsq == rat(1));
  // Round trips both ways.
  CHECK(cosym::plane_from_sphere(v) == u);
  const Vec<Rat> w{rat(3, 5), rat(0), rat(4, 5)};
  CHECK(cosym::sphere_from_plane(cosym::plane_from_sphere(w)) == w);
  // The projection pole has no preimage.
  CHECK_THROWS_AS(cosym::plane_from_sphere(Vec<Rat>{rat(0), rat(0), rat(1)}), std::domain_error);
}

TEST_CASE("stereographic jacobian matches finite differences") {
  const Vec<Rat> u{rat(1, 2), rat(-1, 3)};
  const Mat<Rat> jac = cosym::sphere_from_plane_jacobian(u);
  REQUIRE(jac.rows() == 3);
  REQUIRE(jac.cols() == 2);
  // Exact check at u = (1,0): D = 2, so the tangential block degenerates in
  // the radial direction and the polar row picks it up.
  const Mat<Rat> j10 = cosym::sphere_from_plane_jacobian(Vec<Rat>{rat(1), rat(0)});
  CHECK(j10 == Mat<Rat>{{rat(0), rat(0)}, {rat(0), rat(1)}, {rat(1), rat(0)}});
  // Float cross-check by central differences at the generic point.
  const double h = 1.0 / (1 << 20);
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t row = 0; row < 3; ++row) {
      const auto value = [&](double step) {
        Vec<double> ud = oracle::to_double(u);
        ud[k] += step;
        return cosym::sphere_from_plane(ud)[row];
      };
      const double fd = (value(h) - value(-h)) / (2 * h);
      CHECK(std::fabs(fd - jac(row, k).convert_to<double>()) < 1e-6);
    }
  // Columns are tangent to the sphere: v . dv/du_k = 0.
  const Vec<Rat> v = cosym::sphere_from_plane(u);
  for (std::size_t k = 0; k < 2; ++k) {
    Rat dot(0);
    for (std::size_t row = 0; row < 3; ++row) dot += v[row] * jac(row, k);
    CHECK(dot == rat(0));
  }
}

TEST_CASE("chart admission matches causal class and component") {
  const Geodesic<Rat> timelike(Vec<Rat>{rat(1), rat(2), rat(3), rat(4)},
                               Vec<Rat>{rat(1, 2), rat(-1), rat(1, 3), rat(3)});
  CHECK(cosym::chart_admits(mink, GaugeChart::non_null_axis(3, 1), timelike));
  CHECK(!cosym::chart_admits(mink, GaugeChart::non_null_axis(3, -1), timelike));
  CHECK(!cosym::chart_admits(mink, GaugeChart::non_null_axis(1, 1), timelike));  // v_2 < 0
  CHECK(cosym::chart_admits(mink, GaugeChart::non_null_axis(1, -1), timelike));
  CHECK(!cosym::chart_admits(mink, GaugeChart::null_time_slice(1), timelike));

  const Geodesic<Rat> null_g(Vec<Rat>{rat(1), rat(2), rat(3), rat(4)},
                             Vec<Rat>{rat(2), rat(0), rat(0), rat(2)});
  CHECK(cosym::chart_admits(mink, GaugeChart::null_time_slice(1), null_g));
  CHECK(!cosym::chart_admits(mink, GaugeChart::null_time_slice(-1), null_g));
  CHECK(!cosym::chart_admits(mink, GaugeChart::non_null_axis(0, 1), null_g));

  // A null direction pointing at the stereographic pole is outside the
  // domain: spatial part proportional to the last spatial axis, positively.
  const Geodesic<Rat> pole(Vec<Rat>(4), Vec<Rat>{rat(0), rat(0), rat(3), rat(3)});
  CHECK(!cosym::chart_admits(mink, GaugeChart::null_time_slice(1), pole));
  // The antipode is fine.
  const Geodesic<Rat> antipole(Vec<Rat>(4), Vec<Rat>{rat(0), rat(0), rat(-3), rat(3)});
  CHECK(cosym::chart_admits(mink, GaugeChart::null_time_slice(1), antipole));
}

TEST_CASE("gauge fixing a null geodesic: worked example") {
  // ((1,2,3,4),(2,0,0,2)) is null with positive time orientation; the gauge
  // scales the velocity to unit time component and slides the base point to
  // the time-zero slice.
  const Geodesic<Rat> g(Vec<Rat>{rat(1), rat(2), rat(3), rat(4)},
                        Vec<Rat>{rat(2), rat(0), rat(0), rat(2)});
  const GaugeChart c = GaugeChart::null_time_slice(1);
  const auto phi = cosym::gauge_reparam(mink, c, g);
  CHECK(phi.scale == rat(1, 2));
  CHECK(phi.shift == rat(-2));
  const auto cp = cosym::gauge_fix(mink, c, g);
  CHECK(cp.representative.position == Vec<Rat>{rat(-3), rat(2), rat(3), rat(0)});
  CHECK(cp.representative.velocity == Vec<Rat>{rat(1), rat(0), rat(0), rat(1)});
  CHECK(cp.coords == Vec<Rat>{rat(1), rat(0), rat(-3), rat(2), rat(3)});
}

TEST_CASE("gauge fixing a timelike geodesic: worked example") {
  const Geodesic<Rat> g(Vec<Rat>{rat(1), rat(2), rat(3), rat(4)},
                        Vec<Rat>{rat(1, 2), rat(-1), rat(1, 3), rat(3)});
  const GaugeChart c = GaugeChart::non_null_axis(3, 1);
  const auto cp = cosym::gauge_fix(mink, c, g);
  CHECK(cp.representative.position ==
        Vec<Rat>{rat(2, 11), rat(40, 11), rat(27, 11), rat(-10, 11)});
  CHECK(cp.representative.velocity == Vec<Rat>{rat(1, 6), rat(-1, 3), rat(1, 9), rat(1)});
  CHECK(cp.coords ==
        Vec<Rat>{rat(1, 6), rat(-1, 3), rat(1, 9), rat(2, 11), rat(40, 11), rat(27, 11)});
  // The representative satisfies both section equations.
  CHECK(cp.representative.velocity[3] == rat(1));
  CHECK(mink.inner(cp.representative.velocity, cp.representative.position) == rat(0));
  // Outside the domain: rejection.
  CHECK_THROWS_AS(cosym::gauge_fix(mink, GaugeChart::non_null_axis(3, -1), g), std::domain_error);
}

TEST_CASE("gauge fixing is idempotent and orbit-invariant") {
  const Geodesic<Rat> g(Vec<Rat>{rat(1), rat(2), rat(3), rat(4)},
                        Vec<Rat>{rat(1, 2), rat(-1), rat(1, 3), rat(3)});
  const GaugeChart c = GaugeChart::non_null_axis(3, 1);
  const auto cp = cosym::gauge_fix(mink, c, g);
  const auto again = cosym::gauge_fix(mink, c, cp.representative);
  CHECK(again.representative == cp.representative);
  CHECK(again.coords == cp.coords);
  // The whole orbit lands on the same representative.
  const auto moved = act(cosym::AffineReparam<Rat>(rat(7, 3), rat(-11, 2)), g);
  const auto cp2 = cosym::gauge_fix(mink, c, moved);
  CHECK(cp2.representative == cp.representative);
  CHECK(cp2.coords == cp.coords);
}

TEST_CASE("embed inverts coordinate readout on both chart families") {
  const GaugeChart axis = GaugeChart::non_null_axis(1, -1);
  const Vec<Rat> coords{rat(1, 2), rat(2), rat(-1, 3), rat(4), rat(0), rat(1, 5)};
  const Geodesic<Rat> rep = cosym::chart_embed(mink, axis, coords);
  CHECK(rep.velocity[1] == rat(-1));
  CHECK(mink.inner(rep.velocity, rep.position) == rat(0));
  CHECK(cosym::chart_coords_of(mink, axis, rep) == coords);
  // Round trip through gauge_fix as well.
  const auto cp = cosym::gauge_fix(mink, axis, rep);
  CHECK(cp.coords == coords);

  const GaugeChart nullc = GaugeChart::null_time_slice(-1);
  const Vec<Rat> ncoords{rat(1, 2), rat(-1, 3), rat(1), rat(-2), rat(1, 4)};
  const Geodesic<Rat> nrep = cosym::chart_embed(mink, nullc, ncoords);
  CHECK(mink.norm_sq(nrep.velocity) == rat(0));
  CHECK(nrep.velocity[3] == rat(-1));
  CHECK(nrep.position[3] == rat(0));
  CHECK(cosym::chart_coords_of(mink, nullc, nrep) == ncoords);

  // Coordinates whose free velocity entries make the axis velocity null are
  // outside the chart.
  const GaugeChart taxis = GaugeChart::non_null_axis(3, 1);
  const Vec<Rat> oncone{rat(1), rat(0), rat(0), rat(0), rat(0), rat(0)};
  CHECK_THROWS_AS(cosym::chart_embed(mink, taxis, oncone), std::domain_error);
  CHECK_THROWS_AS(cosym::chart_embed(mink, taxis, Vec<Rat>(5)), std::invalid_argument);
}

TEST_CASE("chart tangent basis spans the section tangent space") {
  const Geodesic<Rat> g(Vec<Rat>{rat(1), rat(2), rat(3), rat(4)},
                        Vec<Rat>{rat(1, 2), rat(-1), rat(1, 3), rat(3)});
  const auto cp = cosym::gauge_fix(mink, GaugeChart::non_null_axis(3, 1), g);
  const auto basis = cosym::chart_tangent_basis(mink, cp);
  REQUIRE(basis.size() == 6);
  std::vector<Vec<Rat>> flat;
  for (const auto& b : basis) flat.push_back(b.flat());
  CHECK(cosym::Subspace<Rat>::span(8, flat).dim() == 6);
  // Each tangent preserves the section equations to first order: moving by
  // epsilon * basis keeps g(V, X) = 0 up to epsilon^2 terms and V_axis fixed.
  for (const auto& b : basis) {
    CHECK(b.dv[3] == rat(0));
    const Rat first_order = mink.inner(cp.representative.velocity, b.dx) +
                            mink.inner(b.dv, cp.representative.position);
    CHECK(first_order == rat(0));
  }

  // Null chart: the u-directions carry the stereographic jacobian columns.
  const auto np = cosym::gauge_fix(mink, GaugeChart::null_time_slice(1),
                                   Geodesic<Rat>(Vec<Rat>{rat(1), rat(2), rat(3), rat(4)},
                                                 Vec<Rat>{rat(2), rat(0), rat(0), rat(2)}));
  const auto nbasis = cosym::chart_tangent_basis(mink, np);
  REQUIRE(nbasis.size() == 5);
  const Mat<Rat> jac = cosym::sphere_from_plane_jacobian(Vec<Rat>{rat(1), rat(0)});
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(nbasis[k].dx.is_zero());
    for (std::size_t j = 0; j < 3; ++j) CHECK(nbasis[k].dv[j] == jac(j, k));
    CHECK(nbasis[k].dv[3] == rat(0));
  }
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(nbasis[2 + j].dv.is_zero());
    CHECK(nbasis[2 + j].dx[j] == rat(1));
    CHECK(nbasis[2 + j].dx[3] == rat(0));
  }
}

TEST_CASE("canonical chart choice") {
  // Null goes to the time slice of its orientation.
  const Geodesic<Rat> null_g(Vec<Rat>(4), Vec<Rat>{rat(2), rat(0), rat(0), rat(-2)});
  CHECK(cosym::choose_chart(mink, null_g) == GaugeChart::null_time_slice(-1));
  // Non-null goes to the largest velocity component with its sign.
  const Geodesic<Rat> g(Vec<Rat>(4), Vec<Rat>{rat(1, 2), rat(-5), rat(1, 3), rat(3)});
  CHECK(cosym::choose_chart(mink, g) == GaugeChart::non_null_axis(1, -1));
  // A null direction at the pole cannot be charted.
  const Geodesic<Rat> pole(Vec<Rat>(4), Vec<Rat>{rat(0), rat(0), rat(1), rat(1)});
  CHECK_THROWS_AS(cosym::choose_chart(mink, pole), std::domain_error);
  // No null charts at all outside Lorentzian signatures.
  const Metric split(2, 2);
  const Geodesic<Rat> split_null(Vec<Rat>(4), Vec<Rat>{rat(1), rat(0), rat(1), rat(0)});
  CHECK_THROWS_AS(cosym::choose_chart(split, split_null), std::domain_error);
}
