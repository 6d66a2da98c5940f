#include "ccert/copulas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "ccert/special_functions.hpp"

namespace ccert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_u(const std::vector<double>& u, std::size_t m) {
  if (u.size() != m) throw CopulaError("copula_eval: dimension mismatch");
  for (double ui : u) {
    if (!(ui >= 0.0) || !(ui <= 1.0)) {
      throw CopulaError("copula_eval: argument outside [0,1]^m");
    }
  }
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double s,
                        double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double sl = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double sr = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::fabs(sl + sr - s) < 15.0 * tol) {
    return sl + sr + (sl + sr - s) / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, sl, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, sr, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double s = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, s, tol, 48);
}

}  // namespace

Copula Copula::independent(std::size_t m) { return Copula(Independent{}, m); }
Copula Copula::maximum(std::size_t m) { return Copula(Maximum{}, m); }

Copula Copula::gumbel(std::size_t m, double theta) {
  if (!(theta >= 1.0)) throw CopulaError("gumbel: requires theta >= 1");
  return Copula(Gumbel{theta}, m);
}

Copula Copula::clayton(std::size_t m, double theta) {
  if (!(theta > 0.0)) throw CopulaError("clayton: requires theta > 0");
  return Copula(Clayton{theta}, m);
}

Copula Copula::gaussian2d(double corr) {
  if (!(corr > -1.0) || !(corr < 1.0)) {
    throw CopulaError("gaussian2d: requires corr in (-1, 1)");
  }
  return Copula(Gaussian2d{corr}, 2);
}

std::string Copula::name() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Independent>) {
          return "independent";
        } else if constexpr (std::is_same_v<T, Maximum>) {
          return "maximum";
        } else if constexpr (std::is_same_v<T, Gumbel>) {
          return "gumbel(" + std::to_string(k.theta) + ")";
        } else if constexpr (std::is_same_v<T, Clayton>) {
          return "clayton(" + std::to_string(k.theta) + ")";
        } else {
          return "gaussian2d(" + std::to_string(k.corr) + ")";
        }
      },
      kind_);
}

double Copula::eval(const std::vector<double>& u) const {
  validate_u(u, m_);
  for (double ui : u) {
    if (ui == 0.0) return 0.0;  // Clayton limit included, by continuity
  }
  return std::visit(
      [&u](const auto& k) -> double {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Independent>) {
          double p = 1.0;
          for (double ui : u) p *= ui;
          return p;
        } else if constexpr (std::is_same_v<T, Maximum>) {
          return *std::min_element(u.begin(), u.end());
        } else if constexpr (std::is_same_v<T, Gumbel>) {
          double s = 0.0;
          for (double ui : u) s += std::pow(-std::log(ui), k.theta);
          return std::exp(-std::pow(s, 1.0 / k.theta));
        } else if constexpr (std::is_same_v<T, Clayton>) {
          double s = 1.0 - static_cast<double>(u.size());
          for (double ui : u) s += std::pow(ui, -k.theta);
          return std::pow(s, -1.0 / k.theta);
        } else {
          if (u[0] == 1.0) return u[1];
          if (u[1] == 1.0) return u[0];
          return bivariate_normal_cdf(std_normal_quantile(u[0]),
                                      std_normal_quantile(u[1]), k.corr);
        }
      },
      kind_);
}

double copula_eval(const Copula& c, const std::vector<double>& u) {
  return c.eval(u);
}

double bivariate_normal_cdf(double x, double y, double corr) {
  const double cap = 9.0;
  if (x <= -cap || y <= -cap) return 0.0;
  x = std::min(x, cap);
  y = std::min(y, cap);
  const double s = std::sqrt(1.0 - corr * corr);
  auto integrand = [corr, s, y](double t) {
    return std_normal_pdf(t) * std_normal_cdf((y - corr * t) / s);
  };
  return integrate(integrand, -cap, x, 1e-10);
}

double separable_prob(const std::vector<double>& h_values,
                      const std::vector<Marginal>& marginals,
                      const Copula& c) {
  if (h_values.size() != marginals.size() ||
      h_values.size() != c.dimension()) {
    throw CopulaError("separable_prob: dimension mismatch");
  }
  std::vector<double> u(h_values.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    u[i] = marginals[i].cdf(h_values[i]);
  }
  return c.eval(u);
}

ConcavityReport check_copula_concave_ginv(const Copula& c,
                                          const std::vector<TransformG>& ghat,
                                          const std::vector<Interval>& region,
                                          int n, double tol,
                                          std::uint64_t seed) {
  const std::size_t m = c.dimension();
  if (ghat.size() != m || region.size() != m) {
    throw CopulaError("check_copula_concave_ginv: dimension mismatch");
  }
  std::vector<double> lo(m), hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    lo[i] = std::isfinite(region[i].lo) ? region[i].lo : region[i].hi - 20.0;
    hi[i] = std::isfinite(region[i].hi) ? region[i].hi : region[i].lo + 20.0;
    if (!std::isfinite(lo[i])) lo[i] = -8.0;  // whole-line box
    if (!std::isfinite(hi[i])) hi[i] = 8.0;
  }

  auto value = [&](const std::vector<double>& z) {
    std::vector<double> u(m);
    for (std::size_t i = 0; i < m; ++i) {
      u[i] = std::clamp(ghat[i].inverse(z[i]), 0.0, 1.0);
    }
    return c.eval(u);
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr double kLambda[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

  ConcavityReport rep;
  rep.worst_violation = -kInf;
  std::vector<double> z1(m), z2(m), zm(m);
  for (int k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      z1[i] = lo[i] + (hi[i] - lo[i]) * unit(rng);
      z2[i] = lo[i] + (hi[i] - lo[i]) * unit(rng);
    }
    const double v1 = value(z1);
    const double v2 = value(z2);
    const double vmin = std::min(v1, v2);
    for (double lambda : kLambda) {
      for (std::size_t i = 0; i < m; ++i) {
        zm[i] = lambda * z1[i] + (1.0 - lambda) * z2[i];
      }
      const double viol = vmin - value(zm);
      ++rep.samples_used;
      if (viol > rep.worst_violation) {
        rep.worst_violation = viol;
        rep.witness_x = z1;
        rep.witness_y = z2;
        rep.witness_lambda = lambda;
      }
    }
  }
  rep.holds = rep.worst_violation <= tol;
  return rep;
}

CopulaThresholdReport copula_threshold(const std::vector<Marginal>& marginals,
                                       const std::vector<double>& b) {
  if (marginals.size() != b.size() || marginals.empty()) {
    throw CopulaError("copula_threshold: dimension mismatch");
  }
  CopulaThresholdReport rep;
  rep.marginal_values.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    rep.marginal_values[i] = marginals[i].cdf(b[i]);
    if (rep.marginal_values[i] > rep.p_star) {
      rep.p_star = rep.marginal_values[i];
      rep.argmax_index = i;
    }
  }
  // All shipped marginal kinds are strictly increasing on their support,
  // so p = p* already yields convexity.
  rep.strict_inequality_needed = false;
  return rep;
}

}  // namespace ccert
