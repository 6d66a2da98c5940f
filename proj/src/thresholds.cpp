#include "ccert/thresholds.hpp"

#include <cmath>
#include <stdexcept>

#include "ccert/distributions.hpp"
#include "ccert/generalized_concavity.hpp"
#include "ccert/special_functions.hpp"

namespace ccert {

double delta_of_q(int m, double q) {
  if (m < 2) throw std::domain_error("delta_of_q: requires m >= 2");
  if (!(q > 0.0) || !(q < 0.5)) {
    throw std::domain_error("delta_of_q: requires q in (0, 1/2)");
  }
  const double a = 0.5 * (m - 1);
  const double rhs = (1.0 - 2.0 * q) * complete_beta(a, 0.5);
  // LHS(delta) = B_i(a, 1/2, 1 - delta^2) is strictly decreasing in delta.
  auto lhs = [a](double delta) { return inc_beta(a, 0.5, 1.0 - delta * delta); };
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (lhs(mid) > rhs ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double p_of_t_q(const RadialCdf& radial, double t_star, double delta_nd,
                int m, double q) {
  if (!(q > 0.0) || !(q < 0.5)) {
    throw std::domain_error("p_of_t_q: requires q in (0, 1/2)");
  }
  return (0.5 - q) * radial(delta_nd * t_star / delta_of_q(m, q)) + 0.5 + q;
}

ThresholdReport eventual_threshold_elliptical(const RadialCdf& radial,
                                              double t_star, double delta_nd,
                                              double p0, int m, int q_grid) {
  if (!(p0 >= 0.5) || !(p0 <= 1.0)) {
    throw std::domain_error(
        "eventual_threshold_elliptical: requires p0 in [1/2, 1]");
  }
  if (!(delta_nd >= 1.0)) {
    throw std::domain_error(
        "eventual_threshold_elliptical: requires delta_nd >= 1");
  }
  auto p_at = [&](double q) { return p_of_t_q(radial, t_star, delta_nd, m, q); };

  const double q_lo = 1e-4, q_hi = 0.5 - 1e-4;
  double best_q = q_lo, best_p = p_at(q_lo);
  for (int i = 1; i < q_grid; ++i) {
    const double q = q_lo + (q_hi - q_lo) * i / (q_grid - 1);
    const double p = p_at(q);
    if (p < best_p) {
      best_p = p;
      best_q = q;
    }
  }

  // Golden-section refinement around the grid minimizer.
  const double step = (q_hi - q_lo) / (q_grid - 1);
  double a = std::max(q_lo, best_q - step);
  double b = std::min(q_hi, best_q + step);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = p_at(c), fd = p_at(d);
  while (b - a > 1e-8) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = p_at(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = p_at(d);
    }
  }
  const double q_star = 0.5 * (a + b);
  const double p_min = std::min(best_p, p_at(q_star));

  ThresholdReport rep;
  rep.route = ThresholdRoute::elliptical_q_formula;
  rep.t_star = t_star;
  rep.delta_nd = delta_nd;
  rep.p0 = p0;
  rep.q_star = q_star;
  rep.delta_q = delta_of_q(m, q_star);
  rep.p_star = std::max(p0, p_min);
  rep.binding = p0 >= p_min ? "p0" : "p(t*, q)";
  return rep;
}

ThresholdReport gaussian_refined_threshold(int m) {
  if (m < 1) throw std::domain_error("gaussian_refined_threshold: m >= 1");
  ThresholdReport rep;
  rep.route = ThresholdRoute::gaussian_refined;
  rep.t_star = std::sqrt(m + 3.0);
  rep.p_star = std_normal_cdf(rep.t_star);
  rep.binding = "Phi(sqrt(m+3))";
  return rep;
}

double quadratic_tstar(const EllipticalLaw& law) {
  if (law.generator().kind != Generator::Kind::gaussian) {
    throw std::domain_error("quadratic_tstar: requires a Gaussian generator");
  }
  const int m = static_cast<int>(law.dimension());
  const double t_star = std::sqrt(m + 3.0);
  const auto chi = Marginal::chi(m);
  const Interval certified{0.0, std::pow(t_star, -3.0), false, true};
  const auto rep =
      check_concave_ginv(chi, power_transform(-3.0), certified, 4000, 1e-9);
  if (!rep.holds) {
    throw ConcavityError(
        "quadratic_tstar: concavity-(-3) certification of the chi cdf failed");
  }
  return t_star;
}

}  // namespace ccert
