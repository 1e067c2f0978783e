#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "schwarz/differentiation.hpp"
#include "schwarz/gallery.hpp"
#include "schwarz/random.hpp"
#include "schwarz/schwarz_verify.hpp"

using namespace schwarz;
using holo::MapExpr;
namespace gal = holo::gallery;
using lp::Exponent;

namespace {

verify::VerifyConfig small(int samples = 2000) {
  verify::VerifyConfig cfg;
  cfg.samples = samples;
  return cfg;
}

// Independent evaluation of the disk bound 2|1 - a|^2 / (1 - |a|^2 + d).
double disk_bound(Complex a, double d) { return 2.0 * std::norm(1.0 - a) / (1.0 - std::norm(a) + d); }

}  // namespace

TEST(OperatorNorm, ExactCasesAndLowerBound) {
  ComplexMatrix A(2, 2);
  A << 1.0, -2.0, Complex(0, 3), 1.0;
  EXPECT_NEAR(verify::operator_norm(A, Exponent::infinity()).value, 4.0, 1e-15);
  const Eigen::JacobiSVD<ComplexMatrix> svd(A);
  EXPECT_NEAR(verify::operator_norm(A, Exponent::finite(2.0)).value, svd.singularValues()[0], 1e-13);
  // Diagonal matrices attain their norm on a basis vector for every p.
  ComplexMatrix D = ComplexMatrix::Zero(3, 3);
  D.diagonal() << 0.5, Complex(0, -0.9), 0.2;
  const auto est = verify::operator_norm(D, Exponent::finite(3.0));
  EXPECT_FALSE(est.exact);
  EXPECT_NEAR(est.value, 0.9, 1e-9);
  // Any vector gives a lower bound.
  CounterRng rng(4);
  const Exponent p3 = Exponent::finite(3.0);
  const auto e3 = verify::operator_norm(A, p3);
  for (int i = 0; i < 100; ++i) {
    const ComplexVector x = sampling::sphere_point(rng, 2, p3);
    EXPECT_LE(lp::norm_p(ComplexVector(A * x), p3), e3.value + 1e-12);
  }
}

TEST(SchwarzPick, IdentityHalfAndFirstTimesLast) {
  const auto id = verify::verify_schwarz_pick(gal::identity(3), Exponent::finite(3.0), small());
  EXPECT_TRUE(id.passed);
  EXPECT_NEAR(id.margin, 0.0, 1e-15);
  EXPECT_NEAR(id.real("op_norm_estimate"), 1.0, 1e-9);

  const auto half = verify::verify_schwarz_pick(gal::scaled_identity(2, 0.5), Exponent::finite(2.0), small());
  EXPECT_TRUE(half.passed);
  EXPECT_GT(half.margin, 0.0);
  EXPECT_NEAR(half.real("op_norm_estimate"), 0.5, 1e-12);

  const auto ex = verify::verify_schwarz_pick(gal::first_times_last(3), Exponent::finite(3.0), small(10000));
  EXPECT_TRUE(ex.passed);
  EXPECT_GE(ex.margin, 0.0);
}

TEST(SchwarzPick, MarginIsHalfTheSmallestSampleNorm) {
  verify::VerifyConfig cfg = small(500);
  const Exponent p = Exponent::finite(4.0);
  const auto v = verify::verify_schwarz_pick(gal::scaled_identity(2, 0.5), p, cfg);
  CounterRng base(cfg.seed, "schwarz-pick");
  double smallest = 1.0;
  for (int i = 0; i < cfg.samples; ++i) {
    CounterRng rng = base.substream(static_cast<std::uint64_t>(i));
    smallest = std::min(smallest, lp::norm_p(sampling::ball_point(rng, 2, p), p));
  }
  EXPECT_NEAR(v.margin, smallest / 2.0, 1e-15);
}

TEST(SchwarzPick, HypothesisFailures) {
  const auto moved = verify::verify_schwarz_pick(gal::disk_moebius(0.3, 1.0), Exponent::finite(2.0), small());
  EXPECT_FALSE(moved.passed);
  EXPECT_FALSE(moved.hypotheses_hold());
  const auto anti = verify::verify_schwarz_pick(gal::conjugate_map(2), Exponent::finite(2.0), small());
  EXPECT_FALSE(anti.hypotheses_hold());
}

TEST(Zhu, IdentityAndSquare) {
  const auto id = verify::verify_zhu(gal::identity(1));
  EXPECT_TRUE(id.passed);
  EXPECT_NEAR(id.real("fprime1"), 1.0, 1e-9);
  EXPECT_NEAR(id.real("bound"), 1.0, 1e-9);
  EXPECT_NEAR(id.margin, 0.0, 1e-8);

  const auto sq = verify::verify_zhu(MapExpr::power(MapExpr::identity(1), 2));
  EXPECT_TRUE(sq.passed);
  EXPECT_NEAR(sq.real("fprime1"), 2.0, 1e-9);
  EXPECT_NEAR(sq.real("bound"), 2.0, 1e-9);
  EXPECT_NEAR(sq.margin, 0.0, 1e-8);
}

TEST(Zhu, ExtremalGridIsSharp) {
  for (double a : {0.0, 0.2, 0.4, 0.6, 0.8}) {
    for (double d : {0.0, 0.2, 0.4, 0.6, 0.8}) {
      if (d > 1.0 - a * a) continue;
      const auto v = verify::verify_zhu(gal::zhu_extremal(a, d));
      EXPECT_TRUE(v.passed) << a << ' ' << d << ' ' << v.detail;
      EXPECT_LE(std::abs(v.margin), 1e-7) << a << ' ' << d;
      EXPECT_NEAR(v.real("bound"), disk_bound(a, d), 1e-9);
    }
  }
  const Complex a(0.3, 0.2);
  const auto v = verify::verify_zhu(gal::zhu_extremal(a, 0.2));
  EXPECT_LE(std::abs(v.margin), 1e-7);
  EXPECT_NEAR(v.real("bound"), disk_bound(a, 0.2), 1e-9);
}

TEST(Zhu, NonExtremalMapsHavePositiveMargin) {
  // f = z * moebius_a(z) * conj-free rotation with f(1) = 1.
  const Complex a(0.4, 0.0);
  const MapExpr m = gal::disk_moebius(a, (1.0 - a) / (1.0 - std::conj(a)));
  const MapExpr f = MapExpr::product(MapExpr::power(MapExpr::identity(1), 2), m);
  const auto v = verify::verify_zhu(f);
  EXPECT_TRUE(v.passed);
  EXPECT_GT(v.margin, 0.1);
  // For f(0) = 0 the bound lies in [1, 2] and never exceeds f'(1).
  EXPECT_GE(v.real("bound"), 1.0 - 1e-12);
  EXPECT_LE(v.real("bound"), 2.0 + 1e-12);
}

TEST(Zhu, RejectsMapsNotFixingOne) {
  const auto v = verify::verify_zhu(gal::scaled_identity(1, 0.5));
  EXPECT_FALSE(v.passed);
  EXPECT_FALSE(v.hypotheses_hold());
}

TEST(Kalaj, EmbeddedDisk) {
  for (const Exponent& p : {Exponent::finite(2.0), Exponent::finite(3.0), Exponent::infinity()}) {
    const MapExpr f = MapExpr::tuple({MapExpr::identity(1), MapExpr::constant(cvec({0.0}), 1)});
    const auto v = verify::verify_kalaj(f, p);
    EXPECT_TRUE(v.passed);
    EXPECT_NEAR(v.real("fprime1_norm"), 1.0, 1e-9);
    EXPECT_NEAR(v.real("bound"), 1.0, 1e-9);
  }
}

TEST(Kalaj, ExtremalGridIsSharp) {
  for (const Exponent& p : {Exponent::finite(2.0), Exponent::finite(3.0)}) {
    const ComplexVector b = lp::normalize(cvec({1.0, Complex(0.5, 0.5)}), p);
    for (double a : {0.0, 0.2, 0.4, 0.6, 0.8}) {
      for (double d : {0.0, 0.2, 0.4, 0.6, 0.8}) {
        if (d > 1.0 - a * a) continue;
        const auto v = verify::verify_kalaj(gal::kalaj_extremal(b, a, d, p), p);
        EXPECT_TRUE(v.passed) << a << ' ' << d << ' ' << v.detail;
        EXPECT_LE(std::abs(v.margin), 1e-7) << a << ' ' << d;
        EXPECT_NEAR(v.real("bound"), disk_bound(a, d), 1e-9);
      }
    }
  }
}

TEST(Kalaj, ScaledDiskEmbedding) {
  const MapExpr xi2 = MapExpr::power(MapExpr::identity(1), 2);
  const MapExpr g = MapExpr::compose(gal::disk_moebius(-0.3, 1.0), xi2);
  const MapExpr f = MapExpr::tuple({g, MapExpr::constant(cvec({0.0}), 1)});
  const auto v = verify::verify_kalaj(f, Exponent::finite(3.0));
  EXPECT_TRUE(v.passed);
  EXPECT_GE(v.margin, 0.0);
}

TEST(BoundaryNormal, IdentityAndPowerSlice) {
  for (double p : {2.0, 3.0, 4.0}) {
    const lp::BoundaryPoint e1(unit_vector(3, 0), Exponent::finite(p));
    const auto [vid, cid] = verify::verify_boundary_normal(gal::identity(3), e1);
    EXPECT_TRUE(vid.passed) << vid.detail;
    EXPECT_NEAR(cid.lambda, 1.0, 1e-8);
    EXPECT_LE(cid.imag_residual, 1e-10);
    EXPECT_LE(cid.proportionality_residual, 1e-10);

    const auto [vsq, csq] = verify::verify_boundary_normal(gal::power_slice(3, 2), e1);
    EXPECT_TRUE(vsq.passed) << vsq.detail;
    EXPECT_NEAR(csq.lambda, 2.0, 1e-8);
    EXPECT_LE(csq.imag_residual, 1e-8);
    EXPECT_LE(csq.proportionality_residual, 1e-8);
    EXPECT_LE(vsq.real("tangent_residual"), 1e-7);
  }
}

TEST(BoundaryNormal, GenericBoundaryPoints) {
  CounterRng rng(17);
  for (double p : {2.0, 3.0, 5.0}) {
    const Exponent e = Exponent::finite(p);
    for (int i = 0; i < 5; ++i) {
      const lp::BoundaryPoint z(sampling::sphere_point(rng, 2, e), e);
      const auto [v, c] = verify::verify_boundary_normal(gal::identity(2), z);
      EXPECT_TRUE(v.passed) << v.detail;
      EXPECT_NEAR(c.lambda, 1.0, 1e-8);
    }
  }
}

TEST(BoundaryNormal, UnitaryFixingZ0) {
  // A unitary fixing z0: U = I + (e^{i t} - 1) P_perp, where P_perp projects on z0's complement.
  CounterRng rng(23);
  const Exponent p2 = Exponent::finite(2.0);
  const ComplexVector z0 = sampling::sphere_point(rng, 3, p2);
  const ComplexMatrix P = ComplexMatrix::Identity(3, 3) - z0 * z0.adjoint();
  const ComplexMatrix U = ComplexMatrix::Identity(3, 3) + (std::polar(1.0, 0.7) - 1.0) * P;
  const auto [v, c] = verify::verify_boundary_normal(gal::unitary(U), lp::BoundaryPoint(z0, p2));
  EXPECT_TRUE(v.passed) << v.detail;
  EXPECT_NEAR(c.lambda, 1.0, 1e-9);
}

TEST(BoundaryNormal, DeclinesMarginWhenOriginMoves) {
  const lp::BoundaryPoint e1(unit_vector(2, 0), Exponent::finite(2.0));
  const auto f = gal::ball_automorphism_fixing(cvec({0.3, 0.1}), unit_vector(2, 0));
  const auto [v, c] = verify::verify_boundary_normal(f, e1);
  EXPECT_TRUE(std::isnan(v.margin));
  EXPECT_GT(c.lambda, 0.0);
  EXPECT_FALSE(v.passed);
}

TEST(LiuWang, IdentityAndPowerSlice) {
  const lp::BoundaryPoint e1(unit_vector(3, 0), Exponent::finite(2.0));
  const auto id = verify::verify_liu_wang(gal::identity(3), e1);
  EXPECT_TRUE(id.passed);
  EXPECT_NEAR(id.real("lambda"), 1.0, 1e-9);
  EXPECT_NEAR(id.real("lower_bound"), 1.0, 1e-12);
  EXPECT_NEAR(id.real("det_abs"), 1.0, 1e-9);
  EXPECT_NEAR(id.real("det_cap"), 1.0, 1e-9);

  const auto sq = verify::verify_liu_wang(gal::power_slice(3, 2), e1);
  EXPECT_TRUE(sq.passed);
  EXPECT_NEAR(sq.real("lambda"), 2.0, 1e-9);
  EXPECT_NEAR(sq.real("det_abs"), 0.0, 1e-9);
  EXPECT_NEAR(sq.real("det_cap"), 4.0, 1e-8);
}

TEST(LiuWang, AutomorphismsAttainTheLowerBoundAndAgreeWithBoundaryNormal) {
  CounterRng rng(31);
  const Exponent p2 = Exponent::finite(2.0);
  for (int i = 0; i < 10; ++i) {
    const ComplexVector z0 = sampling::sphere_point(rng, 2, p2);
    const ComplexVector a = 0.6 * sampling::ball_point(rng, 2, p2);
    const auto f = gal::ball_automorphism_fixing(a, z0);
    const lp::BoundaryPoint z(z0, p2);
    const auto lw = verify::verify_liu_wang(f, z);
    EXPECT_TRUE(lw.passed) << lw.detail;
    // Julia's lemma is an equality for automorphisms.
    const Complex fa = f(ComplexVector::Zero(2)).dot(z0);
    const double lower = std::norm(1.0 - fa) / (1.0 - f(ComplexVector::Zero(2)).squaredNorm());
    EXPECT_NEAR(lw.real("lower_bound"), lower, 1e-12);
    EXPECT_NEAR(lw.real("lambda"), lower, 1e-7);
    // Same lambda as the boundary-normal certificate (evaluated without the f(0) = 0 hypothesis).
    const auto [bn, cert] = verify::verify_boundary_normal(f, z);
    EXPECT_NEAR(cert.lambda, lw.real("lambda"), 1e-9);
  }
}

TEST(ProductSlice, ConstantInZ) {
  const ComplexVector zeros = cvec({0.3, Complex(0, 0.2)});
  const auto phi = gal::blaschke_tuple(zeros, cvec({1.0, 1.0}));
  for (const Exponent& p : {Exponent::finite(2.0), Exponent::infinity()}) {
    const auto f = gal::slice_product(2, zeros, cvec({1.0, 1.0}));
    const auto v = verify::verify_product_slice(f, phi, cvec({0.2, Complex(0.1, -0.3)}), p, small(1000));
    EXPECT_TRUE(v.passed) << v.detail;
    EXPECT_LE(std::abs(v.margin), 1e-12);
  }
  const MapExpr w = MapExpr::linear((ComplexMatrix(1, 2) << 0.0, 1.0).finished());
  const auto v = verify::verify_product_slice(w, MapExpr::identity(1), cvec({0.0}), Exponent::finite(2.0), small(500));
  EXPECT_TRUE(v.passed);
  EXPECT_EQ(v.margin, 0.0);
}

TEST(ProductSlice, MixedMapFailsTheSliceHypothesis) {
  const auto v = verify::verify_product_slice(gal::slice_mixed(1, 2), MapExpr::identity(2), cvec({0.3}),
                                              Exponent::finite(2.0), small(500));
  EXPECT_FALSE(v.passed);
  EXPECT_FALSE(v.hypotheses_hold());
}

TEST(Harnack, ConstantShiftedAndSignChanging) {
  const auto c = verify::harnack_certificate(verify::sample_harnack_grid([](Complex) { return 2.0; }));
  EXPECT_TRUE(c.passed);
  EXPECT_NEAR(c.margin, 2.0 * (1.0 - 0.9 / 1.1), 1e-12);

  const auto grid = verify::sample_harnack_grid([](Complex z) { return 1.0 - z.real(); });
  const auto h = verify::harnack_certificate(grid);
  EXPECT_TRUE(h.passed);
  for (const auto& s : grid.samples) {
    EXPECT_GE(s.value, (1 - s.radius) / (1 + s.radius) - 1e-14);
    EXPECT_LE(s.value, (1 + s.radius) / (1 - s.radius) + 1e-14);
  }
  const auto bad = verify::harnack_certificate(verify::sample_harnack_grid([](Complex z) { return z.real(); }));
  EXPECT_FALSE(bad.passed);
}

TEST(Pluriharmonic, IdentityAtRealPoint) {
  const lp::BoundaryPoint z0(lp::normalize(cvec({0.6, 0.8}), Exponent::finite(2.0)), Exponent::finite(2.0));
  const auto v = verify::verify_pluriharmonic_boundary(gal::identity(2), z0);
  EXPECT_TRUE(v.passed) << v.detail;
  EXPECT_NEAR(v.real("lhs"), 1.0, 1e-8);
  EXPECT_NEAR(v.real("mid"), 0.5, 1e-12);
  EXPECT_NEAR(v.real("low"), 0.5, 1e-12);

  const lp::BoundaryPoint one(cvec({1.0}), Exponent::finite(2.0));
  const auto s = verify::verify_pluriharmonic_boundary(gal::identity(1), one);
  EXPECT_TRUE(s.passed);
  EXPECT_NEAR(s.real("lhs"), 1.0, 1e-8);
}

TEST(Pluriharmonic, RealPartMap) {
  // (z + conj z) / 2 with f(1) = 1.
  const MapExpr f = MapExpr::scale(0.5, MapExpr::sum(gal::identity(1), gal::conjugate_map(1)));
  const auto v = verify::verify_pluriharmonic_boundary(f, lp::BoundaryPoint(cvec({1.0}), Exponent::finite(2.0)));
  EXPECT_TRUE(v.passed) << v.detail;
  EXPECT_GE(v.real("lhs") - v.real("mid"), -1e-8);
}

TEST(Pluriharmonic, BlendsPassAndNonPluriharmonicFails) {
  CounterRng rng(41);
  const Exponent p2 = Exponent::finite(2.0);
  for (int i = 0; i < 5; ++i) {
    const ComplexVector z0 = sampling::sphere_point(rng, 2, p2);
    const ComplexVector w0 = sampling::sphere_point(rng, 2, p2);
    const auto f = gal::pluriharmonic_blend(z0, w0, 0.8, 0.5, i % 2 == 1);
    const auto v = verify::verify_pluriharmonic_boundary(f, lp::BoundaryPoint(z0, p2));
    EXPECT_TRUE(v.passed) << v.detail;
    EXPECT_NEAR(v.real("low"), 0.5 * (1.0 - 0.2), 1e-12);
  }
  const auto sq = MapExpr::tuple({gal::modulus_squared(1)});
  const auto bad = verify::verify_pluriharmonic_boundary(sq, lp::BoundaryPoint(cvec({1.0}), p2));
  EXPECT_FALSE(bad.hypotheses_hold());
}
