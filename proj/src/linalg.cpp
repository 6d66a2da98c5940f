#include "ccert/linalg.hpp"

#include <cmath>
#include <string>

namespace ccert {

Mat cholesky_factor(const Mat& sigma) {
  const std::size_t n = sigma.n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (std::fabs(sigma(i, j) - sigma(j, i)) > 1e-12) {
        throw std::invalid_argument("cholesky_factor: matrix not symmetric");
      }
    }
  }
  Mat l(n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = sigma(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0)) {
      throw NotPositiveDefiniteError(
          "cholesky_factor: non-positive pivot at index " + std::to_string(j),
          j);
    }
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = sigma(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

Vec mat_vec(const Mat& m, const Vec& x) {
  Vec y(m.n, 0.0);
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) y[i] += m(i, j) * x[j];
  }
  return y;
}

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

double quad_form(const Mat& m, const Vec& x) {
  return dot(x, mat_vec(m, x));
}

}  // namespace ccert
