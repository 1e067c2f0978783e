#include <cmath>

#include <gtest/gtest.h>

#include "schwarz/error.hpp"
#include "schwarz/map_expr.hpp"
#include "schwarz/random.hpp"

using namespace schwarz;
using holo::MapExpr;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::NonFinite;
}

// (z0^2 + 3 z1, moebius_a(z0) * conj(z1)) built from nodes.
MapExpr sample_map(Complex a) {
  const MapExpr z0 = MapExpr::coordinate(0, 2);
  const MapExpr z1 = MapExpr::coordinate(1, 2);
  return MapExpr::tuple({MapExpr::sum(MapExpr::power(z0, 2), MapExpr::scale(3.0, z1)),
                         MapExpr::product(MapExpr::moebius(a, 1.0, z0), MapExpr::conj_coordinate(1, 2))});
}

}  // namespace

TEST(MapExpr, EvaluatesLikeDirectFormula) {
  const Complex a(0.2, -0.1);
  const MapExpr f = sample_map(a);
  EXPECT_EQ(f.in_dim(), 2);
  EXPECT_EQ(f.out_dim(), 2);
  EXPECT_FALSE(f.is_holomorphic());
  EXPECT_FALSE(f.is_polynomial());
  CounterRng rng(1);
  for (int i = 0; i < 50; ++i) {
    const ComplexVector z = sampling::ball_point(rng, 2, lp::Exponent::finite(2.0));
    const ComplexVector w = f(z);
    EXPECT_NEAR(std::abs(w[0] - (z[0] * z[0] + 3.0 * z[1])), 0.0, 1e-15);
    const Complex m = (z[0] - a) / (1.0 - std::conj(a) * z[0]);
    EXPECT_NEAR(std::abs(w[1] - m * std::conj(z[1])), 0.0, 1e-15);
  }
}

TEST(MapExpr, LinearConstantComposeReciprocal) {
  ComplexMatrix A(2, 2);
  A << 1.0, Complex(0, 2), -1.0, 0.5;
  const ComplexVector z = cvec({Complex(0.1, 0.2), Complex(-0.3, 0.0)});
  EXPECT_TRUE(MapExpr::linear(A)(z).isApprox(A * z));
  EXPECT_TRUE(MapExpr::constant(cvec({7.0}), 2)(z).isApprox(cvec({7.0})));
  EXPECT_TRUE(MapExpr::identity(2)(z).isApprox(z));
  const MapExpr g = MapExpr::compose(MapExpr::power(MapExpr::identity(2), 3), MapExpr::linear(A));
  const ComplexVector Az = A * z;
  EXPECT_TRUE(g(z).isApprox(Az.cwiseProduct(Az).cwiseProduct(Az)));
  const ComplexVector r = MapExpr::reciprocal(MapExpr::identity(2))(z);
  EXPECT_NEAR(std::abs(r[0] - 1.0 / z[0]), 0.0, 1e-14);
  EXPECT_TRUE(MapExpr::power(MapExpr::identity(2), 0)(z).isApprox(ComplexVector::Ones(2)));
}

TEST(MapExpr, ScalarProductBroadcasts) {
  const MapExpr s = MapExpr::coordinate(0, 2);
  const MapExpr f = MapExpr::product(s, MapExpr::identity(2));
  const ComplexVector z = cvec({2.0, 3.0});
  EXPECT_TRUE(f(z).isApprox(cvec({4.0, 6.0})));
}

TEST(MapExpr, DimensionChecks) {
  EXPECT_EQ(kind_of([] { MapExpr::sum(MapExpr::identity(2), MapExpr::identity(3)); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([] { MapExpr::identity(2)(cvec({1.0})); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([] { MapExpr::compose(MapExpr::identity(2), MapExpr::identity(3)); }),
            ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([] { MapExpr::moebius(1.5, 1.0, MapExpr::identity(1)); }), ErrorKind::BadParams);
}

TEST(MapExpr, PoleHitAndClearance) {
  const Complex a(0.5, 0.0);
  const MapExpr m = MapExpr::moebius(a, 1.0, MapExpr::identity(1));
  EXPECT_EQ(kind_of([&] { m(cvec({1.0 / std::conj(a)})); }), ErrorKind::PoleHit);
  EXPECT_EQ(kind_of([] { MapExpr::reciprocal(MapExpr::identity(1))(cvec({0.0})); }), ErrorKind::PoleHit);
  // The only zero of 1 - conj(a) z is 1/conj(a); the first-order estimate is exact for a linear
  // denominator up to the differencing error of its gradient.
  for (Complex z : {Complex(0.0), Complex(0.3, 0.4), Complex(1.0)}) {
    const double exact = std::abs(1.0 - std::conj(a) * z) / std::abs(a);
    EXPECT_NEAR(holo::pole_clearance(m, cvec({z})), exact, 1e-9 * exact);
  }
  EXPECT_TRUE(std::isinf(holo::pole_clearance(MapExpr::power(MapExpr::identity(2), 3), cvec({0.1, 0.2}))));
}

TEST(MapExpr, TracedDenominators) {
  const MapExpr m = MapExpr::moebius(0.5, 1.0, MapExpr::identity(2));
  std::vector<Complex> dens;
  m.eval_traced(cvec({0.2, 0.4}), dens);
  ASSERT_EQ(dens.size(), 2u);
  EXPECT_NEAR(std::abs(dens[0] - 0.9), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(dens[1] - 0.8), 0.0, 1e-15);
}

TEST(MapExpr, JsonRoundTrip) {
  const MapExpr f = sample_map(Complex(0.1, 0.3));
  const auto j = f.to_json();
  const MapExpr g = MapExpr::from_json(j);
  EXPECT_EQ(g.to_json(), j);
  const ComplexVector z = cvec({Complex(0.2, 0.1), Complex(-0.4, 0.3)});
  EXPECT_TRUE(g(z).isApprox(f(z)));
  ComplexMatrix A(1, 2);
  A << Complex(1, 1), 2.0;
  const MapExpr h = MapExpr::compose(MapExpr::reciprocal(MapExpr::sum(MapExpr::constant(cvec({3.0}), 1),
                                                                     MapExpr::identity(1))),
                                     MapExpr::linear(A));
  EXPECT_TRUE(MapExpr::from_json(h.to_json())(z).isApprox(h(z)));
}

TEST(MapExpr, JsonErrorsCarryPointer) {
  const nlohmann::json bad = {{"node", "tuple"}, {"parts", {{{"node", "coordinate"}, {"index", 0}}}}};
  try {
    MapExpr::from_json(bad);
    FAIL() << "expected SchemaError";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SchemaError);
    EXPECT_NE(std::string(e.what()).find("/parts/0"), std::string::npos) << e.what();
  }
  EXPECT_EQ(kind_of([] { MapExpr::from_json({{"node", "nope"}}); }), ErrorKind::SchemaError);
}
