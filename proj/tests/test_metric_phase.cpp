#include <doctest.h>

#include <cosym/phase.hpp>

#include "oracles.hpp"

using cosym::CausalKind;
using cosym::Geodesic;
using cosym::Mat;
using cosym::Metric;
using cosym::PhaseTangent;
using cosym::Rat;
using cosym::Vec;
using oracle::rat;

namespace {

const Metric mink;  // (3,1), time last

Vec<Rat> e(std::size_t dim, std::size_t i) {
  Vec<Rat> v(dim);
  v[i] = rat(1);
  return v;
}

PhaseTangent<Rat> tangent(Vec<Rat> dx, Vec<Rat> dv) {
  return PhaseTangent<Rat>(std::move(dx), std::move(dv));
}

}  // namespace

TEST_CASE("metric signature and inner product") {
  CHECK(mink.dim() == 4);
  CHECK(mink.plus() == 3);
  CHECK(mink.minus() == 1);
  CHECK(mink.diag_sign(0) == 1);
  CHECK(mink.diag_sign(3) == -1);
  CHECK(mink.inner(e(4, 0), e(4, 0)) == rat(1));
  CHECK(mink.inner(e(4, 3), e(4, 3)) == rat(-1));
  CHECK(mink.inner(e(4, 0), e(4, 3)) == rat(0));
  const Vec<Rat> v{rat(1), rat(2), rat(3), rat(4)};
  CHECK(mink.norm_sq(v) == rat(1 + 4 + 9 - 16));
  CHECK_THROWS_AS(Metric(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Metric(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(mink.inner(e(3, 0), e(3, 0)), std::invalid_argument);
}

TEST_CASE("causal classification splits by the sign of g(v,v)") {
  CHECK(mink.classify(e(4, 0)) == CausalKind::SpaceLike);
  CHECK(mink.classify(e(4, 3)) == CausalKind::TimeLike);
  CHECK(mink.classify(Vec<Rat>{rat(1), rat(0), rat(0), rat(1)}) == CausalKind::Null);
  CHECK_THROWS_AS(mink.classify(Vec<Rat>(4)), std::invalid_argument);
  const auto cc = cosym::causal_class(mink, Vec<Rat>{rat(2), rat(0), rat(0), rat(0)});
  CHECK(cc.h == rat(4));
  CHECK(cc.kind == CausalKind::SpaceLike);
}

TEST_CASE("geodesics require a nonzero velocity") {
  CHECK_THROWS_AS(Geodesic<Rat>(Vec<Rat>(4), Vec<Rat>(4)), std::invalid_argument);
  CHECK_THROWS_AS(Geodesic<Rat>(Vec<Rat>(4), Vec<Rat>(3)), std::invalid_argument);
  const Geodesic<Rat> g(Vec<Rat>{rat(1), rat(2), rat(3), rat(4)}, e(4, 3));
  CHECK(g.dim() == 4);
  const Vec<Rat> z = g.phase_coords();
  CHECK(z.dim() == 8);
  CHECK(z[0] == rat(1));
  CHECK(z[7] == rat(1));  // velocity block sits after the position block
}

TEST_CASE("symplectic pairing on elementary tangents") {
  // omega((e_x, 0), (0, e_x)) = -1: a position move against a velocity move
  // in the same spacelike direction.
  CHECK(cosym::omega_eval(mink, tangent(e(4, 0), Vec<Rat>(4)), tangent(Vec<Rat>(4), e(4, 0))) ==
        rat(-1));
  // omega((0, e_t), (e_t, 0)) = g(e_t, e_t) = -1.
  CHECK(cosym::omega_eval(mink, tangent(Vec<Rat>(4), e(4, 3)), tangent(e(4, 3), Vec<Rat>(4))) ==
        rat(-1));
  // Antisymmetry on a pair of dense tangents.
  const auto a = tangent(Vec<Rat>{rat(1), rat(2), rat(0), rat(-1)},
                         Vec<Rat>{rat(0), rat(1), rat(1), rat(2)});
  const auto b = tangent(Vec<Rat>{rat(2), rat(0), rat(1), rat(1)},
                         Vec<Rat>{rat(1), rat(-1), rat(0), rat(3)});
  CHECK(cosym::omega_eval(mink, a, b) == -cosym::omega_eval(mink, b, a));
  CHECK(cosym::omega_eval(mink, a, a) == rat(0));
}

TEST_CASE("omega matrix realizes the pairing and has determinant one") {
  const Mat<Rat> om = cosym::omega_matrix<Rat>(mink);
  CHECK(om.rows() == 8);
  CHECK(om.is_antisymmetric());
  // Agreement with the evaluation form on a basis sweep.
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const auto ti = PhaseTangent<Rat>::from_flat(e(8, i));
      const auto tj = PhaseTangent<Rat>::from_flat(e(8, j));
      CHECK(om(i, j) == cosym::omega_eval(mink, ti, tj));
    }
  CHECK(oracle::det_cofactor(om) == rat(1));
  CHECK(cosym::determinant(om) == rat(1));
  // The determinant is one in any signature: the block shape forces it.
  CHECK(cosym::determinant(cosym::omega_matrix<Rat>(Metric(2, 2))) == rat(1));
  CHECK(cosym::determinant(cosym::omega_matrix<Rat>(Metric(2, 1))) == rat(1));
}

TEST_CASE("omega inverse matches the closed block form") {
  // Oracle: with G^2 = I the inverse of [[0,-G],[G,0]] is [[0,G],[-G,0]].
  for (const Metric& g : {Metric(3, 1), Metric(2, 2), Metric(2, 1)}) {
    const std::size_t n = g.dim();
    const Mat<Rat> inv = cosym::omega_inverse_matrix<Rat>(g);
    Mat<Rat> closed(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      closed(i, n + i) = rat(g.diag_sign(i));
      closed(n + i, i) = rat(-g.diag_sign(i));
    }
    CHECK(inv == closed);
    CHECK(cosym::omega_matrix<Rat>(g) * inv == Mat<Rat>::identity(2 * n));
  }
}

TEST_CASE("tautological form reads the velocity against position moves") {
  const Geodesic<Rat> g(Vec<Rat>{rat(0), rat(0), rat(0), rat(0)}, e(4, 3));
  // pi(delta) = g(V, dx): no dependence on dv.
  CHECK(cosym::liouville_eval(mink, g, tangent(e(4, 3), Vec<Rat>(4))) == rat(-1));
  CHECK(cosym::liouville_eval(mink, g, tangent(e(4, 0), Vec<Rat>(4))) == rat(0));
  CHECK(cosym::liouville_eval(mink, g, tangent(Vec<Rat>(4), e(4, 3))) == rat(0));
  // d(liouville) = omega: for the *linear* family of forms here this is an
  // exact finite-difference statement. Check one slot pair: the derivative of
  // pi(t_b) along direction t_a minus the derivative of pi(t_a) along t_b.
  const auto ta = tangent(Vec<Rat>{rat(1), rat(0), rat(2), rat(0)},
                          Vec<Rat>{rat(0), rat(1), rat(0), rat(1)});
  const auto tb = tangent(Vec<Rat>{rat(0), rat(1), rat(0), rat(1)},
                          Vec<Rat>{rat(1), rat(0), rat(1), rat(0)});
  const auto shift = [&](const PhaseTangent<Rat>& dir) {
    return Geodesic<Rat>(g.position + dir.dx, g.velocity + dir.dv);
  };
  const Rat d_a_of_b = cosym::liouville_eval(mink, shift(ta), tb) - cosym::liouville_eval(mink, g, tb);
  const Rat d_b_of_a = cosym::liouville_eval(mink, shift(tb), ta) - cosym::liouville_eval(mink, g, ta);
  CHECK(d_a_of_b - d_b_of_a == cosym::omega_eval(mink, ta, tb));
}

TEST_CASE("energy and its differential") {
  const Geodesic<Rat> g(Vec<Rat>{rat(1), rat(2), rat(3), rat(4)},
                        Vec<Rat>{rat(1, 2), rat(-1), rat(1, 3), rat(3)});
  CHECK(cosym::energy(mink, g) == rat(-275, 72));  // half of g(V,V) = -275/36
  const Vec<Rat> dh = cosym::energy_differential(mink, g);
  CHECK(dh.dim() == 8);
  // Position block of dH vanishes; velocity block is G V.
  for (std::size_t i = 0; i < 4; ++i) CHECK(dh[i] == rat(0));
  CHECK(dh[4] == rat(1, 2));
  CHECK(dh[5] == rat(-1));
  CHECK(dh[6] == rat(1, 3));
  CHECK(dh[7] == rat(-3));
  // The flow direction (V, 0) is energy-preserving: dH(flow) = 0.
  const Vec<Rat> flow = cosym::flow_direction(g);
  Rat pairing(0);
  for (std::size_t i = 0; i < 8; ++i) pairing += dh[i] * flow[i];
  CHECK(pairing == rat(0));
  // Hamilton's equation for the free particle: Omega^{-1} dH... the raised
  // differential equals the flow direction.
  const Vec<Rat> raised = cosym::omega_inverse_matrix<Rat>(mink) * dh;
  CHECK(raised == flow);
}

TEST_CASE("extended one-form covector at a concrete point") {
  const cosym::ExtendedPoint<Rat> y(Vec<Rat>{rat(1), rat(2), rat(3), rat(4)},
                                    Vec<Rat>{rat(1, 2), rat(-1), rat(1, 3), rat(3)}, rat(7));
  const Vec<Rat> a = cosym::extended_form_covector(mink, y);
  REQUIRE(a.dim() == 9);
  // dx block: G v. dv block: zero. dt slot: -g(v,v)/2 = 275/72.
  const Vec<Rat> frozen{rat(1, 2), rat(-1), rat(1, 3), rat(-3),
                        rat(0),    rat(0),  rat(0),    rat(0), rat(275, 72)};
  CHECK(a == frozen);
}

TEST_CASE("extended derivative is antisymmetric with flow-line kernel") {
  const cosym::ExtendedPoint<Rat> y(Vec<Rat>{rat(1), rat(0), rat(-2), rat(5)},
                                    Vec<Rat>{rat(2), rat(1), rat(0), rat(3)}, rat(-1));
  const Mat<Rat> d = cosym::extended_form_derivative(mink, y);
  CHECK(d.rows() == 9);
  CHECK(d.is_antisymmetric());
  const auto kernel = cosym::extended_form_kernel(mink, y);
  CHECK(kernel.dim() == 1);
  // The kernel is the lifted flow line (v, 0, 1).
  Vec<Rat> lifted(9);
  for (std::size_t i = 0; i < 4; ++i) lifted[i] = y.v[i];
  lifted[8] = rat(1);
  CHECK(kernel.contains(lifted));
  CHECK((d * lifted).is_zero());
  // Zero velocity has no flow line to report.
  const cosym::ExtendedPoint<Rat> bad(Vec<Rat>(4), Vec<Rat>(4), rat(0));
  CHECK_THROWS_AS(cosym::extended_form_kernel(mink, bad), std::invalid_argument);
}

TEST_CASE("finite differences confirm the extended derivative in float") {
  // d(pi)_{rc} = d/dy_r alpha_c - d/dy_c alpha_r at a generic double point.
  const Vec<double> x0 = oracle::to_double(Vec<Rat>{rat(1), rat(2), rat(3), rat(4)});
  const Vec<double> v0 = oracle::to_double(Vec<Rat>{rat(1, 2), rat(-1), rat(1, 3), rat(3)});
  const cosym::ExtendedPoint<double> y(x0, v0, 7.0);
  const Mat<double> closed = cosym::extended_form_derivative(mink, y);
  const double h = 1.0 / (1 << 20);
  const auto covector_at = [&](std::size_t slot, double value) {
    Vec<double> x = x0;
    Vec<double> v = v0;
    double t = 7.0;
    if (slot < 4)
      x[slot] = value;
    else if (slot < 8)
      v[slot - 4] = value;
    else
      t = value;
    return cosym::extended_form_covector(mink, cosym::ExtendedPoint<double>(x, v, t));
  };
  const auto base = [&](std::size_t slot) { return slot < 4 ? x0[slot] : (slot < 8 ? v0[slot - 4] : 7.0); };
  for (std::size_t r = 0; r < 9; ++r)
    for (std::size_t c = 0; c < 9; ++c) {
      const double dr_ac =
          (covector_at(r, base(r) + h)[c] - covector_at(r, base(r) - h)[c]) / (2 * h);
      const double dc_ar =
          (covector_at(c, base(c) + h)[r] - covector_at(c, base(c) - h)[r]) / (2 * h);
      CHECK(std::fabs((dr_ac - dc_ar) - closed(r, c)) < 1e-6);
    }
}

TEST_CASE("reduction audit returns the dimension triple") {
  const Geodesic<Rat> null_g(Vec<Rat>{rat(1), rat(2), rat(3), rat(4)},
                             Vec<Rat>{rat(1), rat(0), rat(0), rat(1)});
  const auto audit = cosym::reduction_dimension_audit(mink, null_g);
  CHECK(audit.level_set_dim == 7);
  CHECK(audit.reduced_dim == 6);
  CHECK(audit.trajectory_dim == 5);
  // Non-null geodesics are rejected: the audit describes the null stratum.
  const Geodesic<Rat> timelike(Vec<Rat>(4) + e(4, 0), e(4, 3));
  CHECK_THROWS_AS(cosym::reduction_dimension_audit(mink, timelike), std::domain_error);
}
