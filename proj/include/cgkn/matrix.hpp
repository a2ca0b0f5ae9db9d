#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgkn {

// Dense row-major matrix of 64-bit floats. The only numeric container in the
// library; vectors are 1xN or Nx1 as convenient for the caller.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {
    if (r < 0 || c < 0) throw std::invalid_argument("Matrix: negative shape");
  }
  Matrix(int r, int c, std::vector<double> values) : rows(r), cols(c), data(std::move(values)) {
    if (data.size() != static_cast<size_t>(r) * c)
      throw std::invalid_argument("Matrix: data length does not match shape");
  }

  static Matrix zeros(int r, int c) { return Matrix(r, c); }
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
  static Matrix row_vector(std::vector<double> v) {
    int n = static_cast<int>(v.size());
    return Matrix(1, n, std::move(v));
  }

  double& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
  double* row(int i) { return data.data() + static_cast<size_t>(i) * cols; }
  const double* row(int i) const { return data.data() + static_cast<size_t>(i) * cols; }
  size_t size() const { return data.size(); }
  bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }

  bool all_finite() const {
    for (double v : data)
      if (!std::isfinite(v)) return false;
    return true;
  }
  void fill(double v) { std::fill(data.begin(), data.end(), v); }
};

// Reference implementations used by oracles and small call sites; heavy code
// paths go through the kernels layer instead.
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, double s);
double max_abs_diff(const Matrix& a, const Matrix& b);

// Solves A X = B for symmetric positive definite A via Cholesky.
// Throws std::runtime_error naming the pivot index on a non-positive pivot.
Matrix solve_spd(const Matrix& a, const Matrix& b);

// Symmetrizes in place and raises eigenvalues below `floor` up to `floor`.
// Throws std::runtime_error if an eigenvalue is below `fail_below` first.
// Returns true when the floor actually modified the matrix.
bool symmetrize_and_floor(Matrix& a, double floor, double fail_below);

}  // namespace cgkn
