#include "ccert/elliptical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "ccert/special_functions.hpp"

namespace ccert {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

namespace detail {

// Cumulative radial law of a Student generator, tabulated on log-spaced
// knots and evaluated by monotone cubic (Fritsch-Carlson) interpolation.
class StudentRadialTable {
 public:
  StudentRadialTable(std::size_t m, double nu) : m_(m), nu_(nu) {
    log_coef_ = M_LN2 + ln_gamma(0.5 * (m + nu)) - ln_gamma(0.5 * m) -
                ln_gamma(0.5 * nu) - 0.5 * m * std::log(nu);
    build();
  }

  double pdf(double r) const {
    if (r <= 0.0) return 0.0;
    return std::exp(log_coef_ + (m_ - 1.0) * std::log(r) -
                    0.5 * (m_ + nu_) * std::log1p(r * r / nu_));
  }

  double cdf(double r) const {
    if (r <= 0.0) return 0.0;
    if (r >= x_.back()) return 1.0;
    if (r <= x_.front()) return y_.front() * r / x_.front();
    auto it = std::upper_bound(x_.begin(), x_.end(), r);
    const std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
    const double h = x_[i + 1] - x_[i];
    const double t = (r - x_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    return y_[i] * (2 * t3 - 3 * t2 + 1) + h * d_[i] * (t3 - 2 * t2 + t) +
           y_[i + 1] * (-2 * t3 + 3 * t2) + h * d_[i + 1] * (t3 - t2);
  }

  double quantile(double p) const {
    double lo = 0.0, hi = x_.back();
    for (int it = 0; it < 200 && hi - lo > 1e-12 * (1.0 + hi); ++it) {
      const double mid = 0.5 * (lo + hi);
      (cdf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }

 private:
  void build() {
    const int kKnots = 4096;
    // Tail of f_R decays like r^-(nu+1); pick r_max so the missed mass is
    // below 1e-12.
    const double r_max =
        std::min(1e9, std::sqrt(nu_) * std::pow(1e13, 1.0 / nu_));
    const double r_min = 1e-6;
    x_.resize(kKnots);
    y_.resize(kKnots);
    const double ratio = std::log(r_max / r_min) / (kKnots - 1);
    for (int i = 0; i < kKnots; ++i) x_[i] = r_min * std::exp(ratio * i);

    // Composite Simpson per segment, accumulated.
    double cum = pdf(r_min) * r_min / m_;  // mass below the first knot
    y_[0] = cum;
    for (int i = 1; i < kKnots; ++i) {
      const double a = x_[i - 1], b = x_[i];
      const int sub = 8;
      const double h = (b - a) / sub;
      double s = pdf(a) + pdf(b);
      for (int k = 1; k < sub; ++k) {
        s += (k % 2 ? 4.0 : 2.0) * pdf(a + k * h);
      }
      cum += s * h / 3.0;
      y_[i] = cum;
    }
    for (auto& v : y_) v /= cum;

    // Fritsch-Carlson monotone slopes.
    d_.assign(kKnots, 0.0);
    std::vector<double> delta(kKnots - 1);
    for (int i = 0; i + 1 < kKnots; ++i) {
      delta[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
    }
    d_[0] = delta[0];
    d_[kKnots - 1] = delta[kKnots - 2];
    for (int i = 1; i + 1 < kKnots; ++i) {
      if (delta[i - 1] * delta[i] <= 0.0) {
        d_[i] = 0.0;
      } else {
        const double w1 = 2.0 * (x_[i + 1] - x_[i]) + (x_[i] - x_[i - 1]);
        const double w2 = (x_[i + 1] - x_[i]) + 2.0 * (x_[i] - x_[i - 1]);
        d_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
      }
    }
  }

  std::size_t m_;
  double nu_;
  double log_coef_;
  std::vector<double> x_, y_, d_;
};

}  // namespace detail

EllipticalLaw make_elliptical(Vec mu, Mat sigma, Generator gen) {
  if (sigma.n != mu.size()) {
    throw std::invalid_argument("make_elliptical: dimension mismatch");
  }
  EllipticalLaw law;
  law.chol_ = cholesky_factor(sigma);
  law.mu_ = std::move(mu);
  law.sigma_ = std::move(sigma);
  law.gen_ = gen;
  if (gen.kind == Generator::Kind::student) {
    if (!(gen.nu > 0.0)) {
      throw std::invalid_argument("make_elliptical: student requires nu > 0");
    }
    law.student_table_ = std::make_shared<detail::StudentRadialTable>(
        law.mu_.size(), gen.nu);
  }
  return law;
}

double EllipticalLaw::radial_pdf(double r) const {
  if (r < 0.0) return 0.0;
  if (gen_.kind == Generator::Kind::student) return student_table_->pdf(r);
  if (r == 0.0) return dimension() == 1 ? std::sqrt(2.0 / M_PI) : 0.0;
  const double m = static_cast<double>(dimension());
  return std::exp((m - 1.0) * std::log(r) - 0.5 * r * r +
                  (1.0 - 0.5 * m) * M_LN2 - ln_gamma(0.5 * m));
}

double EllipticalLaw::radial_cdf(double r) const {
  if (r <= 0.0) return 0.0;
  if (std::isinf(r)) return 1.0;
  if (gen_.kind == Generator::Kind::student) return student_table_->cdf(r);
  return reg_lower_inc_gamma(0.5 * dimension(), 0.5 * r * r);
}

double EllipticalLaw::radial_quantile(double p) const {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::domain_error("radial_quantile: requires p in (0, 1)");
  }
  if (gen_.kind == Generator::Kind::student) {
    return student_table_->quantile(p);
  }
  double lo = 0.0, hi = std::sqrt(10.0 * dimension());
  while (radial_cdf(hi) < p) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-13 * (1.0 + hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (radial_cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

SpherePointSet sphere_points_equal_angle_2d(int n) {
  if (n < 1) throw std::invalid_argument("sphere_points: requires n >= 1");
  SpherePointSet s;
  s.scheme = "equal_angle_2d";
  s.points.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * M_PI * k / n;
    s.points.push_back({std::cos(a), std::sin(a)});
  }
  return s;
}

SpherePointSet sphere_points_monte_carlo(std::size_t m, int n,
                                         std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sphere_points: requires n >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  SpherePointSet s;
  s.scheme = "monte_carlo";
  s.points.reserve(n);
  for (int k = 0; k < n; ++k) {
    Vec v(m);
    double nrm = 0.0;
    do {
      for (auto& c : v) c = gauss(rng);
      nrm = norm2(v);
    } while (nrm < 1e-12);
    for (auto& c : v) c /= nrm;
    s.points.push_back(std::move(v));
  }
  return s;
}

SpherePointSet default_sphere_points(std::size_t m, std::uint64_t seed) {
  if (m == 2) return sphere_points_equal_angle_2d(720);
  return sphere_points_monte_carlo(m, 20000, seed);
}

ProbabilityEstimate probability(const EllipticalLaw& law, const RadiusFn& rho,
                                const Vec& x, const SpherePointSet& pts) {
  if (pts.points.empty()) {
    throw std::invalid_argument("probability: empty sphere point set");
  }
  double sum = 0.0, sumsq = 0.0;
  for (const auto& v : pts.points) {
    const double f = law.radial_cdf(rho(x, v));
    sum += f;
    sumsq += f * f;
  }
  const double n = static_cast<double>(pts.points.size());
  ProbabilityEstimate est;
  est.n = static_cast<long>(pts.points.size());
  est.value = sum / n;
  const double var = std::max(0.0, (sumsq - sum * sum / n) / std::max(1.0, n - 1.0));
  est.std_err = std::sqrt(var / n);
  return est;
}

ProbabilityEstimate probability(const EllipticalLaw& law, const RadiusFn& rho,
                                const Vec& x, const SpherePointSet& pts,
                                const ConstraintOracle& g) {
  if (g.eval(x, law.mean()) > 0.0) {
    throw RepresentationError(
        "probability: representation hypothesis violated, g(x, mu) > 0");
  }
  return probability(law, rho, x, pts);
}

ProbabilityEstimate direct_mc_probability(const EllipticalLaw& law,
                                          const ConstraintOracle& g,
                                          const Vec& x, int n,
                                          std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("direct_mc_probability: n >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(
      std::numeric_limits<double>::min(), 1.0);
  const std::size_t m = law.dimension();
  long hits = 0;
  Vec zeta(m), xi(m);
  for (int k = 0; k < n; ++k) {
    double nrm = 0.0;
    do {
      for (auto& c : zeta) c = gauss(rng);
      nrm = norm2(zeta);
    } while (nrm < 1e-12);
    const double r = law.radial_quantile(unit(rng));
    const Vec lz = mat_vec(law.cholesky(), zeta);
    for (std::size_t i = 0; i < m; ++i) {
      xi[i] = law.mean()[i] + r * lz[i] / nrm;
    }
    if (g.eval(x, xi) <= 0.0) ++hits;
  }
  ProbabilityEstimate est;
  est.n = n;
  est.value = static_cast<double>(hits) / n;
  est.std_err = std::sqrt(std::max(0.0, est.value * (1.0 - est.value) / n));
  return est;
}

}  // namespace ccert
