#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccert/linalg.hpp"

namespace ccert {

// Thrown when the spherical-radial representation hypothesis g(x, mu) < 0
// fails at the evaluation point.
class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluator of g(x, z); vector-valued constraints are reduced to their
// componentwise maximum so that {g <= 0} keeps the feasible-set semantics.
struct ConstraintOracle {
  using Row = std::function<double(const Vec& x, const Vec& z)>;

  std::vector<Row> rows;
  bool convex_in_z = false;  // caller-asserted
  std::string label;

  ConstraintOracle() = default;
  ConstraintOracle(Row row, bool convex, std::string name = {})
      : rows{std::move(row)}, convex_in_z(convex), label(std::move(name)) {}

  double eval(const Vec& x, const Vec& z) const {
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& r : rows) worst = std::max(worst, r(x, z));
    return worst;
  }
};

}  // namespace ccert
