#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccert/distributions.hpp"

namespace ccert {

class ConcavityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Strictly monotone scalar transform with derivatives and inverse.
struct TransformG {
  enum class Monotonicity { increasing, decreasing };

  std::function<double(double)> value;
  std::function<double(double)> deriv;
  std::function<double(double)> second_deriv;  // may be empty
  std::function<double(double)> inverse;
  Monotonicity monotonicity = Monotonicity::increasing;
  Interval domain{0.0, 0.0};
  std::string label;
};

// G_alpha: t -> t^alpha on (0, inf).
TransformG power_transform(double alpha);
// G_0: t -> ln t on (0, inf).
TransformG log_transform();
// t -> t on the whole line.
TransformG identity_transform();
// G(x) = exp(-(ln x)^(1/3)) on (0, inf), strictly decreasing.
TransformG exotic_transform();
// G(u) = Phi^{-1}(u) on (0, 1); inverse is the standard normal cdf.
TransformG normal_quantile_transform();
// G(u) = (ln u)^2 on (0, 1), strictly decreasing.
TransformG log_squared_transform();

// Outcome of a sampled concavity certificate.
struct ConcavityReport {
  bool holds = false;
  double worst_violation = 0.0;
  std::vector<double> witness_x;
  std::vector<double> witness_y;
  double witness_lambda = 0.0;
  long samples_used = 0;
};

// Uniform sampler over an axis-aligned box, seeded.
struct BoxSampler {
  std::vector<double> lo;
  std::vector<double> hi;
  std::uint64_t seed = 42;
};

// Generalized power mean m_alpha(a, b, lambda); alpha may be -inf.
double generalized_mean(double a, double b, double lambda, double alpha);

using VectorFn = std::function<double(const std::vector<double>&)>;
using ScalarFn = std::function<double(double)>;

// Sampled certificate of the defining G-concavity inequality
//   f(lx + (1-l)y) >= G^{-1}(l G(f(x)) + (1-l) G(f(y))).
ConcavityReport check_g_concavity(const VectorFn& f, const TransformG& g,
                                  const BoxSampler& sampler, int n_pairs,
                                  double tol);

// Scalar variant on an interval.
ConcavityReport check_g_concavity_1d(const ScalarFn& f, const TransformG& g,
                                     const Interval& domain, int n_pairs,
                                     double tol, std::uint64_t seed = 42);

// Sampled midpoint-concavity of z -> F(G^{-1}(z)) on I.
ConcavityReport check_concave_ginv(const ScalarFn& cdf, const TransformG& g,
                                   const Interval& interval, int n,
                                   double tol, std::uint64_t seed = 42);
ConcavityReport check_concave_ginv(const Marginal& marginal,
                                   const TransformG& g,
                                   const Interval& interval, int n,
                                   double tol, std::uint64_t seed = 42);

// Density with derivative, as needed by the G-decreasing test.
struct Density {
  ScalarFn value;
  ScalarFn deriv;
};
Density density_of(const Marginal& marginal);

// Root t* of psi'(t) = -G''/(G')^2 f + f'/G' inside the bracket; beyond
// t* the ratio f/G' is strictly monotone. Throws ConcavityError when the
// bracket shows zero or several sign changes, or when G' has a critical
// point past the candidate root.
double g_decreasing_tstar(const Density& f, const TransformG& g,
                          const Interval& bracket);

// Lemma-style propagation: f G1-concave and G1^{-1} G2-concave on
// G1(f(domain)) imply f G2-concave. Runs all three sampled checks and
// returns the final one.
ConcavityReport check_propagation(const VectorFn& f, const TransformG& g1,
                                  const TransformG& g2,
                                  const BoxSampler& sampler, int n,
                                  double tol);

}  // namespace ccert
