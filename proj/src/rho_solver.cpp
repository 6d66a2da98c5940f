#include "ccert/rho_solver.hpp"

#include <cmath>
#include <limits>

namespace ccert {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ConstraintOracle QuadraticSpec::oracle(std::string label) const {
  QuadraticSpec copy = *this;
  return ConstraintOracle(
      [copy](const Vec& x, const Vec& z) { return copy.eval(x, z); },
      /*convex=*/true, std::move(label));
}

double QuadraticSpec::beta(const Vec& v, const EllipticalLaw& law) const {
  return 0.5 * dot(linear_row, mat_vec(law.cholesky(), v));
}

double QuadraticSpec::h(const Vec& x, const Vec& v,
                        const EllipticalLaw& law) const {
  return quad_form(w_matrix(x), mat_vec(law.cholesky(), v));
}

QuadraticSpec example_quadratic_2d() {
  QuadraticSpec spec;
  spec.w_matrix = [](const Vec& x) {
    Mat w(2);
    w(0, 0) = x[0] * x[0] + 0.5;
    const double d = std::fabs(x[1] - 1.0);
    w(1, 1) = d * d * d + 0.2;
    return w;
  };
  spec.linear_row = {1.0, 1.0};
  spec.b = -1.0;
  return spec;
}

QuadraticSpec linear_combination_quadratic(std::vector<Mat> ws, Vec linear_row,
                                           double b) {
  QuadraticSpec spec;
  spec.w_matrix = [ws = std::move(ws)](const Vec& x) {
    Mat w(ws.front().n);
    for (std::size_t k = 0; k < ws.size(); ++k) {
      for (std::size_t i = 0; i < w.a.size(); ++i) w.a[i] += x[k] * ws[k].a[i];
    }
    return w;
  };
  spec.linear_row = std::move(linear_row);
  spec.b = b;
  return spec;
}

double rho_bisect(const ConstraintOracle& g, const Vec& x, const Vec& v,
                  const EllipticalLaw& law, const BisectOptions& opt) {
  if (g.eval(x, law.mean()) >= 0.0) {
    throw RepresentationError(
        "rho_bisect: representation hypothesis violated, g(x, mu) >= 0");
  }
  const Vec dir = mat_vec(law.cholesky(), v);
  const std::size_t m = dir.size();
  Vec z(m);
  auto along = [&](double r) {
    for (std::size_t i = 0; i < m; ++i) z[i] = law.mean()[i] + r * dir[i];
    return g.eval(x, z);
  };

  // Grow the bracket by doubling from r = 1.
  double lo = 0.0, hi = 1.0;
  while (along(hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > opt.r_max) {
      if (along(opt.r_max) <= 0.0) return kInf;
      hi = opt.r_max;
      break;
    }
  }
  while (hi - lo > opt.tol) {
    const double mid = 0.5 * (lo + hi);
    (along(mid) <= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double rho_quadratic(const QuadraticSpec& spec, const Vec& x, const Vec& v,
                     const EllipticalLaw& law) {
  if (!(spec.b < 0.0)) {
    throw std::invalid_argument("rho_quadratic: requires b < 0");
  }
  const double h = spec.h(x, v, law);
  const double beta = spec.beta(v, law);
  if (h > 0.0) {
    return (-beta + std::sqrt(beta * beta - spec.b * h)) / h;
  }
  if (beta > 0.0) return -spec.b / (2.0 * beta);
  return kInf;
}

TransformG gv_transform(const QuadraticSpec& spec, const Vec& v,
                        const EllipticalLaw& law) {
  if (!(spec.b < 0.0)) {
    throw std::invalid_argument("gv_transform: requires b < 0");
  }
  const double b = spec.b;
  const double beta = spec.beta(v, law);
  TransformG g;
  g.value = [b, beta](double t) {
    const double u = b / t + beta;
    return -u * u;
  };
  g.deriv = [b, beta](double t) {
    return 2.0 * (b / (t * t)) * (b / t + beta);
  };
  g.second_deriv = [b, beta](double t) {
    return -(2.0 * b / (t * t * t)) * (3.0 * b / t + 2.0 * beta);
  };
  g.inverse = [b, beta](double z) { return -b / (std::sqrt(-z) + beta); };
  g.monotonicity = TransformG::Monotonicity::increasing;
  g.domain = beta <= 0.0 ? Interval{0.0, kInf}
                         : Interval{0.0, -b / beta, false, true};
  g.label = "g_v(beta=" + std::to_string(beta) + ")";
  return g;
}

}  // namespace ccert
