#include <cmath>
#include <random>

#include "ccert/rho_solver.hpp"
#include "doctest.h"

using namespace ccert;

namespace {
EllipticalLaw figure_law() {
  const Mat m_scale(2, {0.01125, 0.00675, 0.00675, 0.2025});
  Mat sigma(2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      sigma(i, j) =
          m_scale(i, 0) * m_scale(j, 0) + m_scale(i, 1) * m_scale(j, 1);
    }
  }
  return make_elliptical({0.0, 0.0}, sigma, Generator::gaussian());
}

Vec direction(double theta) { return {std::cos(theta), std::sin(theta)}; }
}  // namespace

TEST_CASE("closed-form radius agrees with bisection") {
  const auto law = figure_law();
  const auto spec = example_quadratic_2d();
  const auto oracle = spec.oracle();
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> xs(-4.0, 4.0);
  std::uniform_real_distribution<double> th(0.0, 2 * M_PI);
  for (int k = 0; k < 200; ++k) {
    const Vec x = {xs(rng), xs(rng)};
    const Vec v = direction(th(rng));
    const double closed = rho_quadratic(spec, x, v, law);
    const double bisected = rho_bisect(oracle, x, v, law);
    CHECK(std::fabs(closed - bisected) <= 1e-7);
    // g_v(rho) = -beta^2 + b h
    const double beta = spec.beta(v, law);
    const double h = spec.h(x, v, law);
    const double gv = -std::pow(spec.b / closed + beta, 2.0);
    CHECK(gv == doctest::Approx(-beta * beta + spec.b * h).epsilon(1e-9));
  }
}

TEST_CASE("degenerate h = 0 branches") {
  // W(x) = x1 * W1 with W1 = 0 gives h = 0 for every direction.
  QuadraticSpec spec = linear_combination_quadratic(
      {Mat(2), Mat(2)}, {1.0, 1.0}, -1.0);
  const auto law = make_elliptical({0.0, 0.0}, Mat::identity(2),
                                   Generator::gaussian());
  // beta > 0 along (1,1)/sqrt(2): root of the linear part, -b / (2 beta)
  const Vec up = direction(M_PI / 4);
  const double beta_up = spec.beta(up, law);
  REQUIRE(beta_up > 0.0);
  CHECK(rho_quadratic(spec, {0.0, 0.0}, up, law) ==
        doctest::Approx(1.0 / (2.0 * beta_up)).epsilon(1e-12));
  // beta <= 0: never binds
  const Vec down = direction(5 * M_PI / 4);
  CHECK(std::isinf(rho_quadratic(spec, {0.0, 0.0}, down, law)));
}

TEST_CASE("bisection brackets and sentinels") {
  const auto law = make_elliptical({0.0, 0.0}, Mat::identity(2),
                                   Generator::gaussian());
  const ConstraintOracle ball(
      [](const Vec&, const Vec& z) { return dot(z, z) - 4.0; }, true);
  CHECK(rho_bisect(ball, {0.0, 0.0}, {1.0, 0.0}, law) ==
        doctest::Approx(2.0).epsilon(1e-9));
  // constraint that never binds -> +inf sentinel
  const ConstraintOracle never(
      [](const Vec&, const Vec&) { return -1.0; }, true);
  CHECK(std::isinf(rho_bisect(never, {0.0, 0.0}, {1.0, 0.0}, law)));
  // infeasible at the mean -> representation error
  const ConstraintOracle outside(
      [](const Vec&, const Vec& z) { return 1.0 - dot(z, z); }, false);
  CHECK_THROWS_AS(rho_bisect(outside, {0.0, 0.0}, {1.0, 0.0}, law),
                  RepresentationError);
}

TEST_CASE("g_v transform: values, inverse and domain") {
  const auto law = figure_law();
  const auto spec = example_quadratic_2d();
  for (double theta : {0.3, 2.0, 4.4}) {
    const Vec v = direction(theta);
    const auto gv = gv_transform(spec, v, law);
    const double beta = spec.beta(v, law);
    for (double t : {0.5, 1.0, 3.0}) {
      if (!gv.domain.contains(t)) continue;
      const double val = gv.value(t);
      CHECK(val == doctest::Approx(-std::pow(spec.b / t + beta, 2.0)));
      CHECK(gv.inverse(val) == doctest::Approx(t).epsilon(1e-10));
      // strictly increasing on its domain
      CHECK(gv.deriv(t) > 0.0);
    }
    if (beta > 0.0) {
      CHECK(gv.domain.hi == doctest::Approx(-spec.b / beta));
    } else {
      CHECK(std::isinf(gv.domain.hi));
    }
  }
}
