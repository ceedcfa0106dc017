#include "fede/linalg.hpp"

#include <lapacke.h>

#include <cmath>
#include <limits>

namespace fede {

Vector DenseMatrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("DenseMatrix::apply: size mismatch");
  Vector y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const double* row = data_.data() + i * cols_;
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += row[j] * x[j];
    y[i] = s;
  }
  return y;
}

Vector DenseMatrix::apply_transpose(const Vector& x) const {
  if (x.size() != rows_) throw std::invalid_argument("DenseMatrix::apply_transpose: size mismatch");
  Vector y(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const double* row = data_.data() + i * cols_;
    double xi = x[i];
    for (std::size_t j = 0; j < cols_; ++j) y[j] += row[j] * xi;
  }
  return y;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      double aik = a(i, k);
      if (aik == 0.0) continue;
      const double* brow = b.data() + k * b.cols();
      double* crow = c.data() + i * b.cols();
      for (std::size_t j = 0; j < b.cols(); ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

LuFactors lu_factor_doolittle(DenseMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("lu_factor_doolittle: matrix must be square");
  std::size_t n = a.rows();
  LuFactors f;
  f.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.perm[i] = static_cast<int>(i);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      double v = std::abs(a(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) throw SingularMatrixError("lu_factor_doolittle: zero pivot at column " +
                                               std::to_string(k));
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
      f.sign = -f.sign;
    }
    double inv = 1.0 / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      double lik = a(i, k) * inv;
      a(i, k) = lik;
      if (lik == 0.0) continue;
      const double* rowk = a.data() + k * n;
      double* rowi = a.data() + i * n;
      for (std::size_t j = k + 1; j < n; ++j) rowi[j] -= lik * rowk[j];
    }
  }
  f.lu = std::move(a);
  return f;
}

Vector lu_solve(const LuFactors& f, const Vector& b) {
  std::size_t n = f.lu.rows();
  if (b.size() != n) throw std::invalid_argument("lu_solve: size mismatch");
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[static_cast<std::size_t>(f.perm[i])];
  for (std::size_t i = 0; i < n; ++i) {
    double s = x[i];
    const double* row = f.lu.data() + i * n;
    for (std::size_t j = 0; j < i; ++j) s -= row[j] * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    const double* row = f.lu.data() + i * n;
    for (std::size_t j = i + 1; j < n; ++j) s -= row[j] * x[j];
    x[i] = s / row[i];
  }
  return x;
}

Vector lu_solve_doolittle(const DenseMatrix& a, const Vector& b) {
  return lu_solve(lu_factor_doolittle(a), b);
}

Vector singular_values(const DenseMatrix& a) {
  // dgesdd only needs the values; sigma(A) = sigma(A^T), so the row-major
  // buffer can be handed over as column-major with the dimensions swapped.
  lapack_int m = static_cast<lapack_int>(a.cols());
  lapack_int n = static_cast<lapack_int>(a.rows());
  std::vector<double> work(a.data(), a.data() + a.rows() * a.cols());
  Vector s(static_cast<std::size_t>(std::min(m, n)));
  lapack_int info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'N', m, n, work.data(), m, s.data(),
                                   nullptr, 1, nullptr, 1);
  if (info != 0) {
    // divide-and-conquer occasionally fails to converge; retry with QR SVD
    work.assign(a.data(), a.data() + a.rows() * a.cols());
    std::vector<double> superb(static_cast<std::size_t>(std::min(m, n)));
    info = LAPACKE_dgesvd(LAPACK_COL_MAJOR, 'N', 'N', m, n, work.data(), m, s.data(), nullptr, 1,
                          nullptr, 1, superb.data());
    if (info != 0) throw std::runtime_error("singular_values: SVD failed to converge");
  }
  return s;
}

double condition_number_2(const DenseMatrix& a) {
  Vector s = singular_values(a);
  if (s.empty()) throw std::invalid_argument("condition_number_2: empty matrix");
  double smin = s.back();
  if (smin < 1e-300) return std::numeric_limits<double>::infinity();
  return s.front() / smin;
}

double dot(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vector& a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, const Vector& x, Vector& y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

}  // namespace fede
