#include "cgkn/matrix.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <Eigen/Eigenvalues>

namespace cgkn {

using EigenMap = Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
using EigenCMap =
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matmul: inner dimensions differ");
  Matrix out(a.rows, b.cols);
  EigenMap(out.data.data(), out.rows, out.cols) =
      EigenCMap(a.data.data(), a.rows, a.cols) * EigenCMap(b.data.data(), b.rows, b.cols);
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out(j, i) = a(i, j);
  return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("add: shape mismatch");
  Matrix out = a;
  for (size_t i = 0; i < out.size(); ++i) out.data[i] += b.data[i];
  return out;
}

Matrix sub(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("sub: shape mismatch");
  Matrix out = a;
  for (size_t i = 0; i < out.size(); ++i) out.data[i] -= b.data[i];
  return out;
}

Matrix scale(const Matrix& a, double s) {
  Matrix out = a;
  for (double& v : out.data) v *= s;
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data[i] - b.data[i]));
  return m;
}

Matrix solve_spd(const Matrix& a, const Matrix& b) {
  if (a.rows != a.cols) throw std::invalid_argument("solve_spd: A not square");
  if (a.rows != b.rows) throw std::invalid_argument("solve_spd: B row count mismatch");
  // Plain non-pivoting Cholesky so that a failing pivot index is meaningful.
  int n = a.rows;
  Matrix l(n, n);
  for (int j = 0; j < n; ++j) {
    double d = a(j, j);
    for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (d <= 0.0)
      throw std::runtime_error("solve_spd: non-positive pivot at index " + std::to_string(j));
    l(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  // Forward/back substitution per column of B.
  Matrix x = b;
  for (int c = 0; c < b.cols; ++c) {
    for (int i = 0; i < n; ++i) {
      double s = x(i, c);
      for (int k = 0; k < i; ++k) s -= l(i, k) * x(k, c);
      x(i, c) = s / l(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
      double s = x(i, c);
      for (int k = i + 1; k < n; ++k) s -= l(k, i) * x(k, c);
      x(i, c) = s / l(i, i);
    }
  }
  return x;
}

bool symmetrize_and_floor(Matrix& a, double floor, double fail_below) {
  if (a.rows != a.cols) throw std::invalid_argument("symmetrize_and_floor: not square");
  int n = a.rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = v;
      a(j, i) = v;
    }
  // Fast path: if A - floor*I admits a Cholesky factorization then every
  // eigenvalue is already >= floor and the floor is a no-op.
  {
    Eigen::MatrixXd shifted = EigenCMap(a.data.data(), n, n);
    for (int i = 0; i < n; ++i) shifted(i, i) -= floor;
    Eigen::LLT<Eigen::MatrixXd> llt(shifted);
    if (llt.info() == Eigen::Success) return false;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(EigenCMap(a.data.data(), n, n));
  if (es.info() != Eigen::Success)
    throw std::runtime_error("symmetrize_and_floor: eigen decomposition failed");
  Eigen::VectorXd w = es.eigenvalues();
  if (w.minCoeff() < fail_below)
    throw std::runtime_error("symmetrize_and_floor: eigenvalue " + std::to_string(w.minCoeff()) +
                             " below failure threshold " + std::to_string(fail_below));
  for (int i = 0; i < n; ++i) w[i] = std::max(w[i], floor);
  Eigen::MatrixXd rebuilt = es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();
  EigenMap(a.data.data(), n, n) = 0.5 * (rebuilt + rebuilt.transpose());
  return true;
}

}  // namespace cgkn
