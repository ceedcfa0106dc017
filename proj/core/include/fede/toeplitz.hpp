#pragma once

#include <complex>
#include <vector>

#include "fede/linalg.hpp"

namespace fede {

/// Diagonal-constant matrix given by its first column and first row
/// (first entries must agree). Dense entry rule:
///   T[i][j] = col[i-j] for i >= j, row[j-i] otherwise.
class ToeplitzOperator {
public:
  ToeplitzOperator(Vector first_column, Vector first_row);

  std::size_t dim() const { return col_.size(); }
  const Vector& first_column() const { return col_; }
  const Vector& first_row() const { return row_; }
  double entry(std::size_t i, std::size_t j) const {
    return i >= j ? col_[i - j] : row_[j - i];
  }

  DenseMatrix dense() const;
  /// O(N log N) product by circulant embedding.
  Vector apply(const Vector& y) const;

private:
  Vector col_, row_;
  std::size_t fft_len_;
  std::vector<std::complex<double>> spectrum_;  // FFT of the embedded circulant column
};

/// a * (p * T(col, row) + q * T(row, col)) * y with one FFT round trip:
/// the two one-sided products come out of the real and imaginary parts of
/// a single complex convolution against t = y + i * reverse(y).
class FastToeplitz {
public:
  FastToeplitz(Vector col, Vector row, double a, double p, double q);

  std::size_t dim() const { return col_.size(); }
  Vector apply(const Vector& y) const;
  /// Same generators with p and q exchanged, i.e. the transpose operator.
  Vector apply_transpose(const Vector& y) const;

  double entry(std::size_t i, std::size_t j) const;
  DenseMatrix dense() const;
  ToeplitzOperator toeplitz() const;

private:
  Vector col_, row_;
  double a_, p_, q_;
  std::size_t fft_len_;
  std::vector<std::complex<double>> spectrum_;

  Vector apply_weights(const Vector& y, double wp, double wq) const;
};

/// One-shot form of the combined product (column generator q1, row
/// generator a1, zero-padded to the dimension of y).
Vector toeplitz_matvec_fft(const Vector& a1, const Vector& q1, const Vector& y, double a,
                           double p, double q);

/// Sum of Kronecker products of 1D factors; dimension is the product of the
/// factor dimensions. Realizes the 2D stiffness structure
/// sum_k L_k (x) R_k with O(N log N) application.
class KroneckerSumOperator {
public:
  void add_term(FastToeplitz left, FastToeplitz right);

  std::size_t dim() const;
  std::size_t left_dim() const;
  std::size_t right_dim() const;
  const std::vector<std::pair<FastToeplitz, FastToeplitz>>& terms() const { return terms_; }

  Vector apply(const Vector& y) const;
  DenseMatrix dense() const;

private:
  std::vector<std::pair<FastToeplitz, FastToeplitz>> terms_;
};

Vector kron_sum_matvec(const KroneckerSumOperator& op, const Vector& y);

}  // namespace fede
