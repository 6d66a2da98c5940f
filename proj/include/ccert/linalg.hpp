#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ccert {

using Vec = std::vector<double>;

// Small dense square matrix, row-major.
struct Mat {
  std::size_t n = 0;
  std::vector<double> a;

  Mat() = default;
  explicit Mat(std::size_t dim) : n(dim), a(dim * dim, 0.0) {}
  Mat(std::size_t dim, std::initializer_list<double> vals) : n(dim), a(vals) {
    if (a.size() != n * n) throw std::invalid_argument("Mat: size mismatch");
  }

  double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  static Mat identity(std::size_t dim) {
    Mat m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }
};

class NotPositiveDefiniteError : public std::runtime_error {
 public:
  NotPositiveDefiniteError(std::string msg, std::size_t pivot)
      : std::runtime_error(std::move(msg)), pivot_index(pivot) {}
  std::size_t pivot_index;
};

// Lower-triangular Cholesky factor of a symmetric positive-definite matrix.
Mat cholesky_factor(const Mat& sigma);

// y = M x.
Vec mat_vec(const Mat& m, const Vec& x);

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);

// x^T M x.
double quad_form(const Mat& m, const Vec& x);

}  // namespace ccert
