#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ccert/constraint.hpp"
#include "ccert/linalg.hpp"

namespace ccert {

struct Generator {
  enum class Kind { gaussian, student };
  Kind kind = Kind::gaussian;
  double nu = 0.0;  // student degrees of freedom

  static Generator gaussian() { return {Kind::gaussian, 0.0}; }
  static Generator student(double nu) { return {Kind::student, nu}; }
};

namespace detail {
class StudentRadialTable;
}

// Elliptical law with spherical-radial decomposition xi = mu + R L zeta.
class EllipticalLaw {
 public:
  const Vec& mean() const { return mu_; }
  const Mat& covariance() const { return sigma_; }
  const Mat& cholesky() const { return chol_; }
  const Generator& generator() const { return gen_; }
  std::size_t dimension() const { return mu_.size(); }

  double radial_pdf(double r) const;
  double radial_cdf(double r) const;  // radial_cdf(+inf) == 1
  double radial_quantile(double p) const;

  friend EllipticalLaw make_elliptical(Vec mu, Mat sigma, Generator gen);

 private:
  Vec mu_;
  Mat sigma_;
  Mat chol_;
  Generator gen_;
  std::shared_ptr<const detail::StudentRadialTable> student_table_;
};

EllipticalLaw make_elliptical(Vec mu, Mat sigma, Generator gen);

// Equal-weight discretization of the uniform law on the unit sphere.
struct SpherePointSet {
  std::vector<Vec> points;
  std::string scheme;
};

SpherePointSet sphere_points_equal_angle_2d(int n);
SpherePointSet sphere_points_monte_carlo(std::size_t m, int n,
                                         std::uint64_t seed);

// Default discretization: deterministic angles in 2-D, Monte Carlo above.
SpherePointSet default_sphere_points(std::size_t m, std::uint64_t seed = 42);

struct ProbabilityEstimate {
  double value = 0.0;
  double std_err = 0.0;
  long n = 0;
};

// Radius function along direction v at decision x; may return +inf.
using RadiusFn = std::function<double(const Vec& x, const Vec& v)>;

// Sphere average of F_R(rho(x, v)) over the point set.
ProbabilityEstimate probability(const EllipticalLaw& law, const RadiusFn& rho,
                                const Vec& x, const SpherePointSet& pts);

// Same, but first checks the representation hypothesis g(x, mu) <= 0.
ProbabilityEstimate probability(const EllipticalLaw& law, const RadiusFn& rho,
                                const Vec& x, const SpherePointSet& pts,
                                const ConstraintOracle& g);

// Crude Monte Carlo over xi = mu + r L zeta.
ProbabilityEstimate direct_mc_probability(const EllipticalLaw& law,
                                          const ConstraintOracle& g,
                                          const Vec& x, int n,
                                          std::uint64_t seed);

}  // namespace ccert
