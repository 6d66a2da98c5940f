#pragma once

#include <functional>
#include <optional>
#include <string>

#include "ccert/elliptical.hpp"

namespace ccert {

enum class ThresholdRoute { elliptical_q_formula, gaussian_refined, copula_max };

struct ThresholdReport {
  double p_star = 0.0;
  double t_star = 0.0;
  std::optional<double> q_star;
  std::optional<double> delta_q;
  double delta_nd = 1.0;
  double p0 = 0.5;
  ThresholdRoute route = ThresholdRoute::elliptical_q_formula;
  std::string binding;
};

using RadialCdf = std::function<double(double)>;

// delta(q): unique root in (0, 1) of
//   B_i((m-1)/2, 1/2, sin^2(arccos delta)) = (1 - 2q) B_c((m-1)/2, 1/2).
double delta_of_q(int m, double q);

// p(t*, q) = (1/2 - q) F_R(delta_nd t* / delta(q)) + 1/2 + q.
double p_of_t_q(const RadialCdf& radial, double t_star, double delta_nd,
                int m, double q);

// Minimizes p(t*, q) over q in (0, 1/2); p* = max(p0, min_q p).
ThresholdReport eventual_threshold_elliptical(const RadialCdf& radial,
                                              double t_star, double delta_nd,
                                              double p0, int m,
                                              int q_grid = 512);

// Gaussian quadratic refinement: p* = Phi(sqrt(m + 3)).
ThresholdReport gaussian_refined_threshold(int m);

// t* = sqrt(m + 3) for a Gaussian law, certified by the sampled
// concavity-(-3) check of the chi cdf. Throws ConcavityError on
// certification failure.
double quadratic_tstar(const EllipticalLaw& law);

}  // namespace ccert
