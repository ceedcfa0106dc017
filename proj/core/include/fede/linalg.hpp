#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fede {

using Vector = std::vector<double>;

/// Row-major dense matrix.
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  Vector apply(const Vector& x) const;
  Vector apply_transpose(const Vector& x) const;
  DenseMatrix transposed() const;

  static DenseMatrix identity(std::size_t n);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Doolittle LU factorization (unit lower triangle) with partial pivoting.
struct LuFactors {
  DenseMatrix lu;             // L below diagonal (unit), U on/above
  std::vector<int> perm;      // row permutation
  int sign = 1;
};
LuFactors lu_factor_doolittle(DenseMatrix a);
Vector lu_solve(const LuFactors& f, const Vector& b);
/// One-shot solve; throws SingularMatrixError on a zero pivot.
Vector lu_solve_doolittle(const DenseMatrix& a, const Vector& b);

/// Spectral condition number sigma_max / sigma_min from a full singular
/// value decomposition. Returns infinity when sigma_min underflows.
double condition_number_2(const DenseMatrix& a);

/// All singular values, descending.
Vector singular_values(const DenseMatrix& a);

// Small vector helpers used throughout.
double dot(const Vector& a, const Vector& b);
double norm2(const Vector& a);
void axpy(double alpha, const Vector& x, Vector& y);

}  // namespace fede
