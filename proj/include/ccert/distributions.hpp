#pragma once

#include <stdexcept>
#include <string>
#include <variant>

namespace ccert {

// Half-open/closed real interval; infinite endpoints allowed.
struct Interval {
  double lo;
  double hi;
  bool lo_closed = false;
  bool hi_closed = false;

  bool contains(double t) const {
    if (t < lo || t > hi) return false;
    if (t == lo && !lo_closed) return false;
    if (t == hi && !hi_closed) return false;
    return true;
  }
};

class DistributionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Univariate marginal law: normal, exponential, chi or Rayleigh.
class Marginal {
 public:
  struct Normal {
    double mean;
    double sd;
  };
  struct Exponential {
    double rate;
  };
  struct Chi {
    int dof;
  };
  struct Rayleigh {
    double scale;
  };

  static Marginal normal(double mean, double sd);
  static Marginal exponential(double rate);
  static Marginal chi(int dof);
  static Marginal rayleigh(double scale);

  double cdf(double t) const;
  double pdf(double t) const;
  double pdf_deriv(double t) const;

  // Inverse cdf on (0, 1), bracketing + bisection.
  double quantile(double p) const;

  Interval support() const;
  std::string name() const;

  bool is_chi() const { return std::holds_alternative<Chi>(kind_); }
  int chi_dof() const;

  // For a chi marginal: the interval on which F is concave-alpha
  // (interval in the transformed variable z = G_alpha(t)).
  Interval concave_alpha_interval(double alpha) const;

 private:
  using Kind = std::variant<Normal, Exponential, Chi, Rayleigh>;
  explicit Marginal(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

}  // namespace ccert
