#include "ccert/distributions.hpp"

#include <cmath>
#include <limits>

#include "ccert/special_functions.hpp"

namespace ccert {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Marginal Marginal::normal(double mean, double sd) {
  if (!(sd > 0.0)) throw DistributionError("normal: requires sd > 0");
  return Marginal(Normal{mean, sd});
}

Marginal Marginal::exponential(double rate) {
  if (!(rate > 0.0)) throw DistributionError("exponential: requires rate > 0");
  return Marginal(Exponential{rate});
}

Marginal Marginal::chi(int dof) {
  if (dof < 1) throw DistributionError("chi: requires dof >= 1");
  return Marginal(Chi{dof});
}

Marginal Marginal::rayleigh(double scale) {
  if (!(scale > 0.0)) throw DistributionError("rayleigh: requires scale > 0");
  return Marginal(Rayleigh{scale});
}

int Marginal::chi_dof() const {
  if (!is_chi()) throw DistributionError("chi_dof: not a chi marginal");
  return std::get<Chi>(kind_).dof;
}

double Marginal::cdf(double t) const {
  return std::visit(
      [t](const auto& k) -> double {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Normal>) {
          return std_normal_cdf((t - k.mean) / k.sd);
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return t <= 0.0 ? 0.0 : -std::expm1(-k.rate * t);
        } else if constexpr (std::is_same_v<T, Chi>) {
          return t <= 0.0 ? 0.0
                          : reg_lower_inc_gamma(0.5 * k.dof, 0.5 * t * t);
        } else {
          return t <= 0.0
                     ? 0.0
                     : -std::expm1(-0.5 * t * t / (k.scale * k.scale));
        }
      },
      kind_);
}

double Marginal::pdf(double t) const {
  return std::visit(
      [t](const auto& k) -> double {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Normal>) {
          return std_normal_pdf((t - k.mean) / k.sd) / k.sd;
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return t < 0.0 ? 0.0 : k.rate * std::exp(-k.rate * t);
        } else if constexpr (std::is_same_v<T, Chi>) {
          if (t <= 0.0) return 0.0;
          const double m = k.dof;
          return std::exp((m - 1.0) * std::log(t) - 0.5 * t * t +
                          (1.0 - 0.5 * m) * M_LN2 - ln_gamma(0.5 * m));
        } else {
          if (t < 0.0) return 0.0;
          const double s2 = k.scale * k.scale;
          return t / s2 * std::exp(-0.5 * t * t / s2);
        }
      },
      kind_);
}

double Marginal::pdf_deriv(double t) const {
  return std::visit(
      [t, this](const auto& k) -> double {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Normal>) {
          const double z = (t - k.mean) / k.sd;
          return -z / (k.sd * k.sd) * std_normal_pdf(z);
        } else if constexpr (std::is_same_v<T, Exponential>) {
          if (t < 0.0) return 0.0;
          return -k.rate * k.rate * std::exp(-k.rate * t);
        } else if constexpr (std::is_same_v<T, Chi>) {
          if (t <= 0.0) return 0.0;
          // f'(t) = f(t) ((m-1)/t - t)
          return pdf(t) * ((k.dof - 1.0) / t - t);
        } else {
          if (t < 0.0) return 0.0;
          const double s2 = k.scale * k.scale;
          return (1.0 / s2 - t * t / (s2 * s2)) *
                 std::exp(-0.5 * t * t / s2);
        }
      },
      kind_);
}

double Marginal::quantile(double p) const {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw DistributionError("quantile: requires p in (0, 1)");
  }
  // Closed forms where cheap, bracketing + bisection otherwise.
  if (const auto* n = std::get_if<Normal>(&kind_)) {
    return n->mean + n->sd * std_normal_quantile(p);
  }
  if (const auto* e = std::get_if<Exponential>(&kind_)) {
    return -std::log1p(-p) / e->rate;
  }
  // chi / rayleigh: bracket from a scale guess and double outward.
  double hi = 1.0;
  if (const auto* c = std::get_if<Chi>(&kind_)) hi = std::sqrt(10.0 * c->dof);
  if (const auto* r = std::get_if<Rayleigh>(&kind_)) hi = 10.0 * r->scale;
  double lo = 0.0;
  while (cdf(hi) < p) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw DistributionError("quantile: bracket overflow");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-13 * (1.0 + hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Interval Marginal::support() const {
  if (std::holds_alternative<Normal>(kind_)) {
    return Interval{-kInf, kInf};
  }
  return Interval{0.0, kInf, true, false};
}

std::string Marginal::name() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Normal>) {
          return "normal(" + std::to_string(k.mean) + "," +
                 std::to_string(k.sd) + ")";
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return "exponential(" + std::to_string(k.rate) + ")";
        } else if constexpr (std::is_same_v<T, Chi>) {
          return "chi(" + std::to_string(k.dof) + ")";
        } else {
          return "rayleigh(" + std::to_string(k.scale) + ")";
        }
      },
      kind_);
}

Interval Marginal::concave_alpha_interval(double alpha) const {
  if (!is_chi()) {
    throw DistributionError(
        "concave_alpha_interval: only available for chi marginals");
  }
  if (alpha > 1.0) {
    throw DistributionError("concave_alpha_interval: requires alpha <= 1");
  }
  const double m = chi_dof();
  if (alpha < 0.0) {
    return Interval{0.0, std::pow(m - alpha, 0.5 * alpha), false, true};
  }
  if (alpha == 0.0) {
    return Interval{0.5 * std::log(m), kInf, true, false};
  }
  return Interval{std::pow(m - alpha, 0.5 * alpha), kInf, true, false};
}

}  // namespace ccert
