#include <algorithm>
#include <cmath>
#include <random>

#include "ccert/copulas.hpp"
#include "ccert/special_functions.hpp"
#include "doctest.h"

using namespace ccert;

TEST_CASE("basic copula identities") {
  const auto ind = Copula::independent(3);
  CHECK(ind.eval({0.2, 0.5, 0.9}) == doctest::Approx(0.09));
  const auto mx = Copula::maximum(2);
  CHECK(mx.eval({0.3, 0.8}) == doctest::Approx(0.3));
  // Gumbel with theta = 1 is independence.
  const auto g1 = Copula::gumbel(2, 1.0);
  CHECK(g1.eval({0.4, 0.7}) == doctest::Approx(0.28).epsilon(1e-12));
  // Gumbel closed form.
  const auto g = Copula::gumbel(2, 1.5);
  const double lu = std::pow(-std::log(0.4), 1.5);
  const double lv = std::pow(-std::log(0.7), 1.5);
  CHECK(g.eval({0.4, 0.7}) ==
        doctest::Approx(std::exp(-std::pow(lu + lv, 1.0 / 1.5))));
  // Clayton closed form.
  const auto c = Copula::clayton(2, 2.0);
  CHECK(c.eval({0.5, 0.6}) ==
        doctest::Approx(std::pow(4.0 + 1.0 / 0.36 - 1.0, -0.5)));
  // zero coordinate annihilates
  for (const auto& cop : {ind, mx, g, c}) {
    std::vector<double> u(cop.dimension(), 0.5);
    u[0] = 0.0;
    CHECK(cop.eval(u) == 0.0);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(Copula::gumbel(2, 0.7), CopulaError);
  CHECK_THROWS_AS(Copula::clayton(2, 0.0), CopulaError);
  CHECK_THROWS_AS(Copula::gaussian2d(1.0), CopulaError);
  CHECK_THROWS_AS(Copula::independent(2).eval({0.5}), CopulaError);
  CHECK_THROWS_AS(Copula::independent(2).eval({0.5, 1.2}), CopulaError);
}

TEST_CASE("bivariate normal cdf") {
  // frozen from an independent implementation
  CHECK(bivariate_normal_cdf(0.5, -0.2, 0.3) ==
        doctest::Approx(0.3320262544201822).epsilon(1e-8));
  CHECK(bivariate_normal_cdf(1.0, 0.4, -0.6) ==
        doctest::Approx(0.5060102528103787).epsilon(1e-8));
  // corr = 0 reduces to the product
  CHECK(bivariate_normal_cdf(0.7, -1.1, 0.0) ==
        doctest::Approx(std_normal_cdf(0.7) * std_normal_cdf(-1.1))
            .epsilon(1e-9));
  const auto gc = Copula::gaussian2d(0.3);
  CHECK(gc.eval({std_normal_cdf(0.5), std_normal_cdf(-0.2)}) ==
        doctest::Approx(0.3320262544201822).epsilon(1e-8));
  CHECK(gc.eval({0.35, 1.0}) == doctest::Approx(0.35).epsilon(1e-9));
}

TEST_CASE("Frechet bounds on random samples") {
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Copula cops[] = {Copula::independent(2), Copula::maximum(2),
                         Copula::gumbel(2, 2.3), Copula::clayton(2, 0.8),
                         Copula::gaussian2d(-0.4)};
  for (int k = 0; k < 10000; ++k) {
    const double u = unit(rng), v = unit(rng);
    const double lower = std::max(u + v - 1.0, 0.0);
    const double upper = std::min(u, v);
    for (const auto& c : cops) {
      const double val = c.eval({u, v});
      CHECK(val >= lower - 1e-9);
      CHECK(val <= upper + 1e-9);
    }
  }
}

TEST_CASE("separable probability composes marginals through the copula") {
  const std::vector<Marginal> margs = {Marginal::normal(0, 1),
                                       Marginal::chi(2)};
  const double p = separable_prob({1.0, 2.0}, margs, Copula::independent(2));
  CHECK(p == doctest::Approx(std_normal_cdf(1.0) * margs[1].cdf(2.0))
                 .epsilon(1e-12));
}

TEST_CASE("copula threshold is the largest marginal value") {
  const std::vector<Marginal> margs = {Marginal::normal(0, 1),
                                       Marginal::chi(2)};
  const auto rep = copula_threshold(margs, {1.86, std::sqrt(3.0)});
  CHECK(rep.p_star == doctest::Approx(std_normal_cdf(1.86)).epsilon(1e-12));
  CHECK(rep.argmax_index == 0);
  REQUIRE(rep.marginal_values.size() == 2);
  CHECK(rep.marginal_values[1] ==
        doctest::Approx(1.0 - std::exp(-1.5)).epsilon(1e-12));
}

TEST_CASE("sampled quasi-concavity of the transformed copula") {
  // With Ghat = G0 the independent copula becomes exp(z1 + z2): quasi-concave
  // (in fact log-linear) on any box of negatives.
  const auto rep = check_copula_concave_ginv(
      Copula::independent(2), {log_transform(), log_transform()},
      {Interval{-3.0, -0.1}, Interval{-3.0, -0.1}}, 3000, 1e-9);
  CHECK(rep.holds);
}
