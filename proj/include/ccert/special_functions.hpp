#pragma once

#include <stdexcept>

namespace ccert {

// Tolerances shared by the iterative special-function routines.
struct Accuracy {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  int max_iter = 500;
};

class SpecialFunctionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// ln Gamma(x), x > 0.
double ln_gamma(double x);

// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double reg_lower_inc_gamma(double a, double x, const Accuracy& acc = {});

// Unregularized incomplete Beta integral_0^x t^(a-1) (1-t)^(b-1) dt.
double inc_beta(double a, double b, double x, const Accuracy& acc = {});

// Complete Beta function B(a, b).
double complete_beta(double a, double b);

double std_normal_cdf(double z);
double std_normal_pdf(double z);

// Inverse of std_normal_cdf on (0, 1).
double std_normal_quantile(double p);

}  // namespace ccert
