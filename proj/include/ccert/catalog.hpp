#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccert/copulas.hpp"
#include "ccert/elliptical.hpp"
#include "ccert/rho_solver.hpp"
#include "ccert/thresholds.hpp"

namespace ccert {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ModelKind {
  elliptical_quadratic,
  elliptical_custom_catalog,
  separable_copula,
};

struct IntegrationSpec {
  std::string scheme;  // "equal_angle_2d" | "monte_carlo" | "" (default)
  int n = 0;           // 0 -> scheme default
  std::uint64_t seed = 42;
};

// A scalar certificate to run before a threshold is reported: concavity of
// ghat(F(G^{-1}(z))) on an interval.
struct MarginalCertificate {
  std::string label;
  std::function<double(double)> f;  // typically ghat o cdf
  TransformG transform;
  Interval interval;
};

// Fully resolved problem instance behind a spec file or catalog key.
struct Problem {
  std::string name;
  ModelKind model = ModelKind::elliptical_quadratic;

  // Elliptical routes.
  std::optional<EllipticalLaw> law;
  std::optional<QuadraticSpec> quad;
  std::optional<ConstraintOracle> oracle;

  // Separable copula route.
  std::vector<Marginal> marginals;
  std::vector<std::function<double(const Vec&)>> h_fns;
  std::vector<double> b;
  std::optional<Copula> copula;
  std::vector<MarginalCertificate> certificates;
  std::optional<double> comparison_value;  // prior-work threshold, if any

  double delta_nd = 1.0;
  double p0 = 0.5;
  IntegrationSpec integration;
  std::vector<double> grid_box;  // default x1_min,x1_max,x2_min,x2_max

  // Radius function for the elliptical routes (closed form when quadratic).
  RadiusFn radius_fn() const;
  SpherePointSet make_sphere_points() const;
};

// Builtin problem catalog.
Problem builtin_problem(const std::string& key);
std::vector<std::string> builtin_problem_names();

// Parse a problem spec file (key/value with [sections]); unknown keys are
// an error. An entry `catalog = <key>` expands a builtin and then applies
// the file's integration/delta_nd/p0 overrides.
Problem load_problem_file(const std::string& path);

// Named scalar/vector functions and transforms for `certify`.
struct CertifySpec {
  std::string function;   // catalog function key
  int dof = 2;            // chi density parameter
  std::string transform;  // catalog transform key
  double alpha = -1.0;    // parameter of g-alpha
  std::vector<double> interval;  // lo,hi for concave_ginv
  std::vector<double> bracket;   // lo,hi for tstar
  std::vector<double> box;       // flattened lo1,hi1,lo2,hi2,... sampler box
  std::string copula;            // copula kind for copula_ginv
  double theta = 1.5;            // copula parameter
  double corr = 0.0;
  int n = 2000;
  double tol = 1e-9;
  std::uint64_t seed = 42;
};

CertifySpec load_certify_file(const std::string& path);

TransformG catalog_transform(const CertifySpec& spec);
VectorFn catalog_function(const std::string& key);
Density catalog_density(const CertifySpec& spec);
std::vector<double> default_certify_box(const std::string& function_key);

// Paper-value verification suite.
struct VerifyRow {
  std::string id;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

std::vector<VerifyRow> run_verify_suite();

}  // namespace ccert
