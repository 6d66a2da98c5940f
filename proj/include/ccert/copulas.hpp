#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ccert/distributions.hpp"
#include "ccert/generalized_concavity.hpp"

namespace ccert {

class CopulaError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Copula families from the catalog: independent, maximum, Gumbel, Clayton
// and the bivariate Gaussian.
class Copula {
 public:
  struct Independent {};
  struct Maximum {};
  struct Gumbel {
    double theta;  // >= 1
  };
  struct Clayton {
    double theta;  // > 0
  };
  struct Gaussian2d {
    double corr;  // in (-1, 1)
  };

  static Copula independent(std::size_t m);
  static Copula maximum(std::size_t m);
  static Copula gumbel(std::size_t m, double theta);
  static Copula clayton(std::size_t m, double theta);
  static Copula gaussian2d(double corr);

  std::size_t dimension() const { return m_; }
  std::string name() const;

  double eval(const std::vector<double>& u) const;

 private:
  using Kind = std::variant<Independent, Maximum, Gumbel, Clayton, Gaussian2d>;
  Copula(Kind kind, std::size_t m) : kind_(kind), m_(m) {}
  Kind kind_;
  std::size_t m_;
};

double copula_eval(const Copula& c, const std::vector<double>& u);

// P[xi <= h(x)] = C(F_1(h_1), ..., F_m(h_m)).
double separable_prob(const std::vector<double>& h_values,
                      const std::vector<Marginal>& marginals, const Copula& c);

// Bivariate standard normal cdf with correlation corr, by 1-D adaptive
// quadrature of the conditional normal.
double bivariate_normal_cdf(double x, double y, double corr);

// Sampled quasi-concavity of z -> C(G_1^{-1}(z_1), ..., G_m^{-1}(z_m)) on
// a product of intervals.
ConcavityReport check_copula_concave_ginv(const Copula& c,
                                          const std::vector<TransformG>& ghat,
                                          const std::vector<Interval>& region,
                                          int n, double tol,
                                          std::uint64_t seed = 42);

struct CopulaThresholdReport {
  double p_star = 0.0;
  std::size_t argmax_index = 0;
  bool strict_inequality_needed = false;
  std::vector<double> marginal_values;
};

// Theorem-style copula threshold p* = max_i F_i(b_i).
CopulaThresholdReport copula_threshold(const std::vector<Marginal>& marginals,
                                       const std::vector<double>& b);

}  // namespace ccert
