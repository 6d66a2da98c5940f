#include <cmath>

#include "ccert/elliptical.hpp"
#include "ccert/linalg.hpp"
#include "doctest.h"

using namespace ccert;

namespace {
EllipticalLaw std_gaussian(std::size_t m) {
  return make_elliptical(Vec(m, 0.0), Mat::identity(m), Generator::gaussian());
}
}  // namespace

TEST_CASE("gaussian radial law is chi(m)") {
  const auto law = std_gaussian(2);
  // chi(2) cdf: 1 - exp(-r^2/2)
  for (double r : {0.5, 1.3, 2.0, 3.1}) {
    CHECK(law.radial_cdf(r) ==
          doctest::Approx(1.0 - std::exp(-r * r / 2)).epsilon(1e-12));
  }
  CHECK(law.radial_cdf(std::numeric_limits<double>::infinity()) == 1.0);
  const auto law3 = std_gaussian(3);
  // chi(3) value frozen from an independent implementation
  CHECK(law3.radial_cdf(1.7) ==
        doctest::Approx(0.5911022114014984).epsilon(1e-11));
  for (double p : {0.1, 0.5, 0.9, 0.999}) {
    CHECK(law3.radial_cdf(law3.radial_quantile(p)) ==
          doctest::Approx(p).epsilon(1e-8));
  }
}

TEST_CASE("student radial law matches the F-distribution reduction") {
  // ||T||^2 / m ~ F(m, nu) for a standard multivariate t.
  const auto law = make_elliptical({0.0, 0.0}, Mat::identity(2),
                                   Generator::student(4.0));
  CHECK(law.radial_cdf(0.5) == doctest::Approx(0.11418685121107267).epsilon(5e-5));
  CHECK(law.radial_cdf(1.0) == doctest::Approx(0.36).epsilon(5e-5));
  CHECK(law.radial_cdf(2.0) == doctest::Approx(0.75).epsilon(5e-5));
  CHECK(law.radial_cdf(5.0) == doctest::Approx(0.9809750297265161).epsilon(5e-5));
  for (double p : {0.2, 0.5, 0.95}) {
    CHECK(law.radial_cdf(law.radial_quantile(p)) ==
          doctest::Approx(p).epsilon(1e-6));
  }
}

TEST_CASE("cholesky factor reproduces the covariance") {
  const Mat sigma(2, {0.01125, 0.00675, 0.00675, 0.2025});
  const auto law = make_elliptical({0.0, 0.0}, sigma, Generator::gaussian());
  const Mat& l = law.cholesky();
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < 2; ++k) acc += l(i, k) * l(j, k);
      CHECK(acc == doctest::Approx(sigma(i, j)).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(
      make_elliptical({0.0, 0.0}, Mat(2, {1.0, 2.0, 2.0, 1.0}),
                      Generator::gaussian()),
      NotPositiveDefiniteError);
}

TEST_CASE("sphere point sets") {
  const auto four = sphere_points_equal_angle_2d(4);
  REQUIRE(four.points.size() == 4);
  CHECK(four.points[0][0] == doctest::Approx(1.0));
  CHECK(four.points[1][1] == doctest::Approx(1.0));
  CHECK(four.points[2][0] == doctest::Approx(-1.0));
  CHECK(four.points[3][1] == doctest::Approx(-1.0));

  const auto mc = sphere_points_monte_carlo(5, 300, 99);
  REQUIRE(mc.points.size() == 300);
  for (const auto& v : mc.points) {
    CHECK(norm2(v) == doctest::Approx(1.0).epsilon(1e-12));
  }
  // determinism
  const auto mc2 = sphere_points_monte_carlo(5, 300, 99);
  CHECK(mc.points[17] == mc2.points[17]);
}

TEST_CASE("probability integrates F_R(rho) over the sphere") {
  const auto law = std_gaussian(2);
  const auto pts = sphere_points_equal_angle_2d(360);
  // rho == c for all directions: phi = F_R(c) exactly.
  const RadiusFn ball = [](const Vec&, const Vec&) { return 1.3; };
  const auto est = probability(law, ball, {0.0, 0.0}, pts);
  CHECK(est.value ==
        doctest::Approx(1.0 - std::exp(-1.3 * 1.3 / 2)).epsilon(1e-12));
  CHECK(est.std_err == doctest::Approx(0.0).epsilon(1e-12));
  // rho == +inf: phi = 1
  const RadiusFn all = [](const Vec&, const Vec&) {
    return std::numeric_limits<double>::infinity();
  };
  CHECK(probability(law, all, {0.0, 0.0}, pts).value == doctest::Approx(1.0));
}

TEST_CASE("representation hypothesis is enforced") {
  const auto law = make_elliptical({2.0, 0.0}, Mat::identity(2),
                                   Generator::gaussian());
  const ConstraintOracle ball(
      [](const Vec&, const Vec& z) { return dot(z, z) - 1.0; }, true);
  const RadiusFn rho = [](const Vec&, const Vec&) { return 1.0; };
  CHECK_THROWS_AS(
      probability(law, rho, {0.0, 0.0}, sphere_points_equal_angle_2d(8), ball),
      RepresentationError);
}

TEST_CASE("direct Monte Carlo agrees on a closed-form ball probability") {
  const auto law = std_gaussian(2);
  const ConstraintOracle ball(
      [](const Vec&, const Vec& z) { return dot(z, z) - 2.25; }, true);
  // P[||Z|| <= 1.5] = 1 - exp(-1.125)
  const double exact = 1.0 - std::exp(-1.125);
  const auto est = direct_mc_probability(law, ball, {0.0, 0.0}, 200000, 7);
  CHECK(std::fabs(est.value - exact) <= 3.5 * est.std_err);
}
