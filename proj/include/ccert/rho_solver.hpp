#pragma once

#include <functional>

#include "ccert/constraint.hpp"
#include "ccert/elliptical.hpp"
#include "ccert/generalized_concavity.hpp"
#include "ccert/linalg.hpp"

namespace ccert {

class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BisectOptions {
  double r_max = 1e6;
  double tol = 1e-10;
};

// Largest radius along direction Lv from mu with g(x, .) <= 0; +inf when
// the constraint never binds before r_max.
double rho_bisect(const ConstraintOracle& g, const Vec& x, const Vec& v,
                  const EllipticalLaw& law, const BisectOptions& opt = {});

// Quadratic constraint g(x,z) = z^T W(x) z + w^T z + b with b < 0; the
// linear row w satisfies w^T z = 2 sum_i a_i w_i^T z.
struct QuadraticSpec {
  std::function<Mat(const Vec& x)> w_matrix;
  Vec linear_row;
  double b = -1.0;

  double eval(const Vec& x, const Vec& z) const {
    return quad_form(w_matrix(x), z) + dot(linear_row, z) + b;
  }
  ConstraintOracle oracle(std::string label = "quadratic") const;

  // beta(v) = sum_i a_i w_i^T (Lv) = w^T (Lv) / 2.
  double beta(const Vec& v, const EllipticalLaw& law) const;
  // h(x, v) = (Lv)^T W(x) (Lv).
  double h(const Vec& x, const Vec& v, const EllipticalLaw& law) const;
};

// W(x) = diag(x1^2 + 0.5, |x2 - 1|^3 + 0.2), the catalog's 2-D instance.
QuadraticSpec example_quadratic_2d();

// W(x) = sum_i x_i W_i with PSD W_i, x >= 0.
QuadraticSpec linear_combination_quadratic(std::vector<Mat> ws, Vec linear_row,
                                           double b);

// Closed-form radius for a quadratic constraint; degenerate h = 0 branches
// return -b/(2 beta) or +inf.
double rho_quadratic(const QuadraticSpec& spec, const Vec& x, const Vec& v,
                     const EllipticalLaw& law);

// g_v(t) = -(b/t + beta(v))^2, strictly increasing on its domain, with
// inverse -b / (sqrt(-t) + beta(v)).
TransformG gv_transform(const QuadraticSpec& spec, const Vec& v,
                        const EllipticalLaw& law);

}  // namespace ccert
