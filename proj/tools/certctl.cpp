// certctl: probability, threshold, certification and grid commands over the
// builtin problem catalog and key/value spec files.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccert/catalog.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitRepresentation = 3;
constexpr int kExitCertificate = 4;
constexpr int kExitNot2d = 5;

std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("CERTCTL_SEED");
  if (!raw) return std::nullopt;
  try {
    return static_cast<std::uint64_t>(std::stoull(raw));
  } catch (const std::exception&) {
    throw ccert::ParseError("CERTCTL_SEED is not an integer");
  }
}

ccert::Problem resolve_problem(const std::string& spec) {
  for (const auto& key : ccert::builtin_problem_names()) {
    if (key == spec) return ccert::builtin_problem(key);
  }
  return ccert::load_problem_file(spec);
}

std::vector<double> parse_csv_doubles(const std::string& s,
                                      const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ccert::ParseError("cannot parse " + what + ": '" + item + "'");
    }
  }
  if (out.empty()) throw ccert::ParseError("empty " + what);
  return out;
}

std::string fmt9(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

void print_report(const ccert::ConcavityReport& r) {
  std::cout << "holds = " << (r.holds ? "true" : "false") << "\n";
  std::cout << "worst_violation = " << fmt9(r.worst_violation) << "\n";
  std::cout << "samples = " << r.samples_used << "\n";
  if (!r.witness_x.empty()) {
    std::cout << "witness_x =";
    for (double v : r.witness_x) std::cout << " " << fmt9(v);
    std::cout << "\nwitness_y =";
    for (double v : r.witness_y) std::cout << " " << fmt9(v);
    std::cout << "\nwitness_lambda = " << fmt9(r.witness_lambda) << "\n";
  }
}

int cmd_prob(const std::string& spec, const std::string& x_arg) {
  ccert::Problem problem = resolve_problem(spec);
  if (const auto s = env_seed()) problem.integration.seed = *s;
  const ccert::Vec x = parse_csv_doubles(x_arg, "--x");

  if (problem.model == ccert::ModelKind::separable_copula) {
    if (!problem.copula) throw ccert::ParseError("spec carries no copula");
    std::vector<double> h(problem.h_fns.size());
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = problem.h_fns[i](x);
    const double phi =
        ccert::separable_prob(h, problem.marginals, *problem.copula);
    std::cout << "phi = " << fmt9(phi) << "\n";
    std::cout << "std_err = 0\n";
    std::cout << "n = 1\n";
    return kExitOk;
  }

  const auto& law = *problem.law;
  const auto rho = problem.radius_fn();
  const auto pts = problem.make_sphere_points();
  const ccert::ConstraintOracle oracle =
      problem.quad ? problem.quad->oracle() : *problem.oracle;
  const auto est = ccert::probability(law, rho, x, pts, oracle);
  std::cout << "phi = " << fmt9(est.value) << "\n";
  std::cout << "std_err = " << fmt9(est.std_err) << "\n";
  std::cout << "n = " << est.n << "\n";
  return kExitOk;
}

int cmd_threshold(const std::string& spec) {
  ccert::Problem problem = resolve_problem(spec);
  if (const auto s = env_seed()) problem.integration.seed = *s;

  if (problem.model == ccert::ModelKind::separable_copula) {
    for (const auto& cert : problem.certificates) {
      const auto rep = ccert::check_concave_ginv(
          cert.f, cert.transform, cert.interval, 2000, 1e-9,
          problem.integration.seed);
      if (!rep.holds) {
        std::cerr << "certificate failed: " << cert.label
                  << " (worst violation " << fmt9(rep.worst_violation)
                  << ")\n";
        return kExitCertificate;
      }
      std::cout << "certified: " << cert.label << "\n";
    }
    const auto rep = ccert::copula_threshold(problem.marginals, problem.b);
    std::cout << "route = copula_max\n";
    std::cout << "p_star = " << fmt9(rep.p_star) << "\n";
    std::cout << "argmax_index = " << rep.argmax_index << "\n";
    for (std::size_t i = 0; i < rep.marginal_values.size(); ++i) {
      std::cout << "F_" << i + 1 << "(b_" << i + 1
                << ") = " << fmt9(rep.marginal_values[i]) << "\n";
    }
    if (problem.comparison_value) {
      std::cout << "comparison_p_star = " << fmt9(*problem.comparison_value)
                << "\n";
    }
    return kExitOk;
  }

  if (problem.model != ccert::ModelKind::elliptical_quadratic) {
    throw ccert::ParseError(
        "threshold requires a quadratic or separable model");
  }
  const auto& law = *problem.law;
  double t_star = 0.0;
  try {
    t_star = ccert::quadratic_tstar(law);
  } catch (const ccert::ConcavityError& e) {
    std::cerr << "certificate failed: " << e.what() << "\n";
    return kExitCertificate;
  }
  const int m = static_cast<int>(law.dimension());

  const auto refined = ccert::gaussian_refined_threshold(m);
  std::cout << "route = gaussian_refined\n";
  std::cout << "t_star = " << fmt9(t_star) << "\n";
  std::cout << "p_star = " << fmt9(refined.p_star) << "\n";

  const ccert::RadialCdf radial = [&law](double r) {
    return law.radial_cdf(r);
  };
  const auto viaq = ccert::eventual_threshold_elliptical(
      radial, t_star, problem.delta_nd, problem.p0, m);
  std::cout << "route = elliptical_q_formula\n";
  std::cout << "t_star = " << fmt9(viaq.t_star) << "\n";
  if (viaq.q_star) std::cout << "q_star = " << fmt9(*viaq.q_star) << "\n";
  if (viaq.delta_q) std::cout << "delta_q = " << fmt9(*viaq.delta_q) << "\n";
  std::cout << "p_star = " << fmt9(viaq.p_star) << "\n";
  std::cout << "binding = " << viaq.binding << "\n";
  return kExitOk;
}

int cmd_grid(const std::string& spec, const std::string& box_arg, int n,
             const std::string& out_path) {
  ccert::Problem problem = resolve_problem(spec);
  if (const auto s = env_seed()) problem.integration.seed = *s;

  if (problem.model == ccert::ModelKind::separable_copula || !problem.law ||
      problem.law->dimension() != 2) {
    std::cerr << "grid requires a 2-D elliptical problem\n";
    return kExitNot2d;
  }
  std::vector<double> box =
      box_arg.empty() ? problem.grid_box : parse_csv_doubles(box_arg, "--box");
  if (box.size() != 4 || !(box[0] < box[1]) || !(box[2] < box[3])) {
    throw ccert::ParseError("--box must be x_min,x_max,y_min,y_max");
  }
  if (n < 2) throw ccert::ParseError("--n must be at least 2");

  const auto& law = *problem.law;
  const auto rho = problem.radius_fn();
  const auto pts = problem.make_sphere_points();
  const int m = static_cast<int>(law.dimension());
  const double t_star = std::sqrt(m + 3.0);

  std::ofstream grid_out(out_path);
  std::ofstream mask_out(out_path + ".mask");
  if (!grid_out || !mask_out) {
    throw ccert::ParseError("cannot open output file: " + out_path);
  }
  grid_out << "x1,x2,phi\n";
  mask_out << "x1,x2,mask\n";
  for (int i = 0; i < n; ++i) {
    const double x1 = box[0] + (box[1] - box[0]) * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double x2 = box[2] + (box[3] - box[2]) * j / (n - 1);
      const ccert::Vec x = {x1, x2};
      double phi = 0.0;
      int in_mask = 0;
      try {
        const auto est = ccert::probability(law, rho, x, pts);
        phi = est.value;
        double min_rho = std::numeric_limits<double>::infinity();
        for (const auto& v : pts.points) {
          min_rho = std::min(min_rho, rho(x, v));
          if (min_rho < t_star) break;
        }
        in_mask = min_rho >= t_star ? 1 : 0;
      } catch (const ccert::RepresentationError&) {
        phi = 0.0;  // infeasible even at the mean
      }
      grid_out << fmt9(x1) << "," << fmt9(x2) << "," << fmt9(phi) << "\n";
      mask_out << fmt9(x1) << "," << fmt9(x2) << "," << in_mask << "\n";
    }
  }
  std::cout << "wrote " << out_path << " and " << out_path << ".mask (" << n
            << "x" << n << ")\n";
  return kExitOk;
}

int cmd_verify() {
  const auto rows = ccert::run_verify_suite();
  bool all_pass = true;
  std::cout << "id | expected | computed | tolerance | status\n";
  for (const auto& r : rows) {
    std::cout << r.id << " | " << fmt9(r.expected) << " | " << fmt9(r.computed)
              << " | " << fmt9(r.tolerance) << " | "
              << (r.pass ? "pass" : "FAIL") << "\n";
    all_pass = all_pass && r.pass;
  }
  std::cout << (all_pass ? "all checks passed" : "FAILURES present") << " ("
            << rows.size() << " checks)\n";
  return all_pass ? kExitOk : kExitVerifyFailed;
}

ccert::Marginal certify_marginal(const ccert::CertifySpec& spec) {
  if (spec.function == "normal") return ccert::Marginal::normal(0.0, 1.0);
  if (spec.function == "chi") return ccert::Marginal::chi(spec.dof);
  if (spec.function == "exponential") {
    return ccert::Marginal::exponential(1.0);
  }
  if (spec.function == "rayleigh") return ccert::Marginal::rayleigh(1.5);
  throw ccert::ParseError("unknown marginal for concave_ginv: '" +
                          spec.function + "'");
}

int cmd_certify(const std::string& spec_path, const std::string& check) {
  ccert::CertifySpec spec = ccert::load_certify_file(spec_path);
  if (const auto s = env_seed()) spec.seed = *s;

  if (check == "tstar") {
    const auto density = ccert::catalog_density(spec);
    if (spec.bracket.size() != 2) {
      throw ccert::ParseError("tstar needs bracket = lo,hi");
    }
    double t_star = 0.0;
    try {
      t_star = ccert::g_decreasing_tstar(
          density, ccert::catalog_transform(spec),
          ccert::Interval{spec.bracket[0], spec.bracket[1]});
    } catch (const ccert::ConcavityError& e) {
      std::cerr << "certificate failed: " << e.what() << "\n";
      return kExitCertificate;
    }
    std::cout << "t_star = " << fmt9(t_star) << "\n";
    return kExitOk;
  }

  ccert::ConcavityReport report;
  if (check == "g_concavity") {
    const auto f = ccert::catalog_function(spec.function);
    std::vector<double> box =
        spec.box.empty() ? ccert::default_certify_box(spec.function)
                         : spec.box;
    if (box.size() % 2 != 0) throw ccert::ParseError("odd box length");
    ccert::BoxSampler sampler;
    for (std::size_t i = 0; i + 1 < box.size(); i += 2) {
      sampler.lo.push_back(box[i]);
      sampler.hi.push_back(box[i + 1]);
    }
    sampler.seed = spec.seed;
    report = ccert::check_g_concavity(f, ccert::catalog_transform(spec),
                                      sampler, spec.n, spec.tol);
  } else if (check == "concave_ginv") {
    if (spec.interval.size() != 2) {
      throw ccert::ParseError("concave_ginv needs interval = lo,hi");
    }
    report = ccert::check_concave_ginv(
        certify_marginal(spec), ccert::catalog_transform(spec),
        ccert::Interval{spec.interval[0], spec.interval[1], false, true},
        spec.n, spec.tol, spec.seed);
  } else if (check == "copula_ginv") {
    if (spec.interval.size() != 2) {
      throw ccert::ParseError("copula_ginv needs interval = lo,hi");
    }
    ccert::Copula copula = ccert::Copula::independent(2);
    if (spec.copula == "independent" || spec.copula.empty()) {
      copula = ccert::Copula::independent(2);
    } else if (spec.copula == "maximum") {
      copula = ccert::Copula::maximum(2);
    } else if (spec.copula == "gumbel") {
      copula = ccert::Copula::gumbel(2, spec.theta);
    } else if (spec.copula == "clayton") {
      copula = ccert::Copula::clayton(2, spec.theta);
    } else if (spec.copula == "gaussian2d") {
      copula = ccert::Copula::gaussian2d(spec.corr);
    } else {
      throw ccert::ParseError("unknown copula kind: '" + spec.copula + "'");
    }
    const ccert::Interval region{spec.interval[0], spec.interval[1], false,
                                 true};
    const auto ghat = ccert::catalog_transform(spec);
    report = ccert::check_copula_concave_ginv(copula, {ghat, ghat},
                                              {region, region}, spec.n,
                                              spec.tol, spec.seed);
  } else {
    throw ccert::ParseError("unknown check: '" + check + "'");
  }

  print_report(report);
  if (!report.holds) return kExitCertificate;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chance-constraint probability and convexity certification"};
  app.require_subcommand(1);

  std::string spec, x_arg, box_arg, out_path = "grid.csv";
  std::string check = "g_concavity";
  int n = 101;

  auto* prob = app.add_subcommand("prob", "evaluate phi(x)");
  prob->add_option("--spec", spec, "spec file or catalog key")->required();
  prob->add_option("--x", x_arg, "decision vector v1,v2,...")->required();

  auto* threshold =
      app.add_subcommand("threshold", "eventual-convexity threshold p*");
  threshold->add_option("--spec", spec, "spec file or catalog key")
      ->required();

  auto* grid = app.add_subcommand("grid", "phi over a 2-D grid, CSV + mask");
  grid->add_option("--spec", spec, "spec file or catalog key")->required();
  grid->add_option("--box", box_arg, "x_min,x_max,y_min,y_max");
  grid->add_option("--n", n, "points per axis");
  grid->add_option("--out", out_path, "output CSV path");

  auto* verify = app.add_subcommand("verify", "run the literature-value suite");
  (void)verify;

  auto* certify = app.add_subcommand("certify", "run a concavity certificate");
  certify->add_option("--spec", spec, "certify spec file")->required();
  certify
      ->add_option("--check", check,
                   "g_concavity|concave_ginv|copula_ginv|tstar")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitParse;
  }

  try {
    if (app.got_subcommand(prob)) return cmd_prob(spec, x_arg);
    if (app.got_subcommand(threshold)) return cmd_threshold(spec);
    if (app.got_subcommand(grid)) return cmd_grid(spec, box_arg, n, out_path);
    if (app.got_subcommand(verify)) return cmd_verify();
    if (app.got_subcommand(certify)) return cmd_certify(spec, check);
  } catch (const ccert::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ccert::RepresentationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRepresentation;
  } catch (const ccert::ConcavityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
