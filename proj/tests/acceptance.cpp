// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ccert/catalog.hpp"
#include "ccert/special_functions.hpp"

using namespace ccert;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
  std::printf("CRITERION %d: %s — %s\n", criterion, pass ? "PASS" : "FAIL",
              what.c_str());
  if (!pass) ++failures;
}

bool within(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

// --- criterion 1: published numbers reproduce, under 60 s ---------------

void criterion1() {
  const auto start = std::chrono::steady_clock::now();
  const auto rows = run_verify_suite();
  bool ok = rows.size() >= 12;
  std::string first_fail;
  for (const auto& r : rows) {
    if (!r.pass && first_fail.empty()) first_fail = r.id;
    ok = ok && r.pass;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  ok = ok && secs < 60.0;
  report(1, ok,
         "published-value suite (" + std::to_string(rows.size()) +
             " checks, " + std::to_string(secs) + " s)" +
             (first_fail.empty() ? "" : ", first failure: " + first_fail));
}

// --- criterion 2: delta(q) against closed form and the Beta residual ----

void criterion2() {
  bool ok = true;
  double worst = 0.0;
  for (int k = 1; k < 1000; ++k) {
    const double q = 0.5 * k / 1000.0;
    worst = std::max(worst, std::fabs(delta_of_q(2, q) - std::sin(M_PI * q)));
  }
  ok = ok && worst <= 1e-8;

  double worst_res = 0.0;
  for (int m : {3, 5, 10}) {
    const double a = (m - 1) / 2.0;
    const double bc = complete_beta(a, 0.5);
    for (double q : {0.05, 0.1, 0.25, 0.4}) {
      const double d = delta_of_q(m, q);
      const double res =
          std::fabs(inc_beta(a, 0.5, 1.0 - d * d) - (1.0 - 2.0 * q) * bc);
      worst_res = std::max(worst_res, res);
    }
  }
  ok = ok && worst_res <= 1e-9;
  report(2, ok,
         "delta(q): sin(pi q) gap " + std::to_string(worst) +
             ", Beta residual " + std::to_string(worst_res));
}

// --- criterion 3: closed-form rho vs bisection -------------------------

void criterion3() {
  const auto problem = builtin_problem("paper-quadratic-2d");
  const auto& law = *problem.law;
  const auto spec = *problem.quad;
  const auto oracle = spec.oracle();
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> xs(-5.0, 5.0);
  std::uniform_real_distribution<double> th(0.0, 2 * M_PI);
  double worst_rho = 0.0, worst_id = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Vec x = {xs(rng), xs(rng)};
    const Vec v = {std::cos(th(rng)), std::sin(th(rng))};
    const double closed = rho_quadratic(spec, x, v, law);
    const double bisected = rho_bisect(oracle, x, v, law);
    worst_rho = std::max(worst_rho, std::fabs(closed - bisected));
    const double beta = spec.beta(v, law);
    const double h = spec.h(x, v, law);
    const double gv = -std::pow(spec.b / closed + beta, 2.0);
    worst_id = std::max(worst_id, std::fabs(gv - (-beta * beta + spec.b * h)));
  }
  const bool ok = worst_rho <= 1e-7 && worst_id <= 1e-9;
  report(3, ok,
         "rho closed form vs bisection gap " + std::to_string(worst_rho) +
             ", g_v identity residual " + std::to_string(worst_id));
}

// --- criterion 4: estimator cross-validation ----------------------------

void criterion4() {
  const auto problem = builtin_problem("paper-quadratic-2d");
  const auto& law = *problem.law;
  const auto spec = *problem.quad;
  const auto oracle = spec.oracle();
  const auto rho = problem.radius_fn();
  const auto pts = sphere_points_monte_carlo(2, 100000, 4242);
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> xs(-6.0, 6.0);
  std::uniform_real_distribution<double> ys(-2.0, 4.0);
  bool ok = true;
  double worst_sigmas = 0.0;
  for (int k = 0; k < 10; ++k) {
    const Vec x = {xs(rng), ys(rng)};
    const auto sr = probability(law, rho, x, pts, oracle);
    const auto mc = direct_mc_probability(law, oracle, x, 100000, 8100 + k);
    const double se =
        std::sqrt(sr.std_err * sr.std_err + mc.std_err * mc.std_err);
    const double sigmas = std::fabs(sr.value - mc.value) / std::max(se, 1e-12);
    worst_sigmas = std::max(worst_sigmas, sigmas);
    ok = ok && sigmas <= 3.0;
  }

  // half-space check against the closed form Phi(c / ||L^T a||)
  const auto hlaw = make_elliptical({0.0, 0.0}, Mat(2, {1.2, 0.3, 0.3, 0.8}),
                                    Generator::gaussian());
  const Vec a = {1.0, 0.5};
  const double c = 1.2;
  const ConstraintOracle half(
      [a, c](const Vec&, const Vec& z) { return dot(a, z) - c; }, true);
  const RadiusFn hrho = [&half, &hlaw](const Vec& x, const Vec& v) {
    return rho_bisect(half, x, v, hlaw);
  };
  const auto est = probability(hlaw, hrho, {0.0, 0.0}, pts, half);
  const Mat& l = hlaw.cholesky();
  const Vec lta = {l(0, 0) * a[0] + l(1, 0) * a[1],
                   l(0, 1) * a[0] + l(1, 1) * a[1]};
  const double exact = std_normal_cdf(c / norm2(lta));
  const bool half_ok =
      std::fabs(est.value - exact) <= 3.0 * std::max(est.std_err, 1e-12);
  ok = ok && half_ok;
  report(4, ok,
         "spherical-radial vs direct MC, worst gap " +
             std::to_string(worst_sigmas) + " combined std errs; half-space " +
             std::to_string(est.value) + " vs exact " + std::to_string(exact));
}

// --- criterion 5: property suites ---------------------------------------

void criterion5() {
  bool ok = true;
  std::string detail;

  // m_alpha properties
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> pos(0.05, 4.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 1000 && ok; ++k) {
    const double a = pos(rng), b = pos(rng), l = unit(rng);
    double prev = -1e308;
    for (double alpha : {-50.0, -10.0, -2.0, -0.5, 0.0, 0.5, 1.0, 3.0}) {
      const double m = generalized_mean(a, b, l, alpha);
      if (m < prev - 1e-12) {
        ok = false;
        detail = "m_alpha monotonicity";
      }
      prev = m;
    }
    if (std::fabs(generalized_mean(a, b, l, 1e-7) -
                  generalized_mean(a, b, l, 0.0)) > 1e-4) {
      ok = false;
      detail = "m_alpha continuity at 0";
    }
    const double mn = std::min(a, b);
    if (std::fabs(generalized_mean(a, b, 0.5, -100.0) - mn) > 1e-2 * mn) {
      ok = false;
      detail = "m_alpha limit at -inf";
    }
  }

  // Frechet bounds on 10^4 samples
  const Copula cops[] = {Copula::independent(2), Copula::maximum(2),
                         Copula::gumbel(2, 1.5), Copula::clayton(2, 1.2),
                         Copula::gaussian2d(0.5)};
  for (int k = 0; k < 10000 && ok; ++k) {
    const double u = unit(rng), v = unit(rng);
    for (const auto& cop : cops) {
      const double val = cop.eval({u, v});
      if (val < std::max(u + v - 1.0, 0.0) - 1e-9 ||
          val > std::min(u, v) + 1e-9) {
        ok = false;
        detail = "Frechet bounds, " + cop.name();
      }
    }
  }

  // marginal round trips
  const Marginal margs[] = {Marginal::normal(0, 1), Marginal::chi(2),
                            Marginal::chi(5), Marginal::exponential(0.7),
                            Marginal::rayleigh(1.5)};
  for (const auto& m : margs) {
    for (double p : {0.05, 0.3, 0.9}) {
      if (std::fabs(m.cdf(m.quantile(p)) - p) > 1e-7) {
        ok = false;
        detail = "marginal round trip " + m.name();
      }
    }
  }

  // positive concavity certificates hold with tiny worst violation
  const auto ex = exotic_transform();
  const ConcavityReport certs[] = {
      check_concave_ginv(Marginal::chi(2), power_transform(-1.0),
                         Interval{1e-6, 1.0 / std::sqrt(3.0), false, true},
                         4000, 1e-9),
      check_concave_ginv(Marginal::chi(2), power_transform(-3.0),
                         Interval{1e-6, std::pow(5.0, -1.5), false, true},
                         4000, 1e-9),
      check_concave_ginv([](double t) { return std_normal_cdf(t); }, ex,
                         Interval{1e-4, ex.value(1.86), false, true}, 4000,
                         1e-9),
      check_g_concavity(
          [](const std::vector<double>& x) {
            return std::exp(-x[0] * x[0] * x[0]);
          },
          ex, BoxSampler{{-2.0}, {2.0}, 5}, 4000, 1e-9),
  };
  for (const auto& c : certs) {
    if (!c.holds || c.worst_violation > 1e-9) {
      ok = false;
      detail = "positive certificate violation";
    }
  }

  report(5, ok, ok ? "m_alpha, Frechet, round trips, certificates" : detail);
}

// --- criterion 6: figure substitute over the grid -----------------------

void criterion6() {
  const auto problem = builtin_problem("paper-quadratic-2d");
  const auto& law = *problem.law;
  const auto rho = problem.radius_fn();
  const auto oracle = problem.quad->oracle();
  const auto pts = problem.make_sphere_points();
  const auto& box = problem.grid_box;
  const double t_star = std::sqrt(5.0);
  const int n = 101;

  bool in_range = true, mask_in_superlevel = true;
  int mask_count = 0;
  std::vector<Vec> mask_points;
  for (int i = 0; i < n; ++i) {
    const double x1 = box[0] + (box[1] - box[0]) * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double x2 = box[2] + (box[3] - box[2]) * j / (n - 1);
      const Vec x = {x1, x2};
      const double phi = probability(law, rho, x, pts).value;
      if (!(phi >= 0.0 && phi <= 1.0)) in_range = false;
      double min_rho = std::numeric_limits<double>::infinity();
      for (const auto& v : pts.points) {
        min_rho = std::min(min_rho, rho(x, v));
        if (min_rho < t_star) break;
      }
      if (min_rho >= t_star) {
        ++mask_count;
        mask_points.push_back(x);
        if (phi < 0.9) mask_in_superlevel = false;
      }
    }
  }

  // spot-check 5 grid points against direct Monte Carlo
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> xs(box[0], box[1]);
  std::uniform_real_distribution<double> ys(box[2], box[3]);
  bool spots_ok = true;
  for (int k = 0; k < 5; ++k) {
    const Vec x = {xs(rng), ys(rng)};
    const double phi = probability(law, rho, x, pts).value;
    const auto mc = direct_mc_probability(law, oracle, x, 100000, 9000 + k);
    if (std::fabs(phi - mc.value) > 3.0 * std::max(mc.std_err, 1e-12)) {
      spots_ok = false;
    }
  }

  const bool ok =
      in_range && mask_count > 0 && mask_in_superlevel && spots_ok;
  report(6, ok,
         "101x101 grid in [0,1]=" + std::string(in_range ? "yes" : "no") +
             ", mask points " + std::to_string(mask_count) +
             ", mask within phi>=0.9: " +
             (mask_in_superlevel ? "yes" : "no") + ", MC spot checks " +
             (spots_ok ? "pass" : "fail"));
}

// --- criterion 7: negative tests ----------------------------------------

void criterion7() {
  const Density sinc2{
      [](double t) {
        const double s = std::sin(t) / t;
        return s * s * 2.0 / M_PI;
      },
      [](double t) {
        const double s = std::sin(t), c = std::cos(t);
        return (2 * s * c / (t * t) - 2 * s * s / (t * t * t)) * 2.0 / M_PI;
      }};
  bool sinc_ok = true;
  for (double alpha : {-0.5, -1.0, -3.0}) {
    try {
      g_decreasing_tstar(sinc2, power_transform(alpha),
                         Interval{1.0, 100.0});
      sinc_ok = false;  // a threshold must not exist
    } catch (const ConcavityError&) {
    }
  }

  const VectorFn f = [](const std::vector<double>& x) {
    return std::exp(-x[0] * x[0] * x[0]);
  };
  BoxSampler box{{-2.0}, {2.0}, 17};
  bool alpha_fails = true;
  for (double alpha : {-3.0, -1.0, -0.5, 0.5, 1.0}) {
    const auto rep = alpha == 0.0
                         ? check_g_concavity(f, log_transform(), box, 4000,
                                             1e-9)
                         : check_g_concavity(f, power_transform(alpha), box,
                                             4000, 1e-9);
    if (rep.holds) alpha_fails = false;
  }
  const auto exotic_ok = check_g_concavity(f, exotic_transform(), box, 4000,
                                           1e-9);

  const bool ok = sinc_ok && alpha_fails && exotic_ok.holds;
  report(7, ok,
         std::string("sin^2 t / t^2 rejected for every alpha: ") +
             (sinc_ok ? "yes" : "no") + "; exp(-x^3) fails alpha-concavity: " +
             (alpha_fails ? "yes" : "no") + ", passes exotic-G: " +
             (exotic_ok.holds ? "yes" : "no"));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  if (failures == 0) {
    std::printf("ACCEPTANCE: all 7 criteria passed\n");
    return 0;
  }
  std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
  return 1;
}
