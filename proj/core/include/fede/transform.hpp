#pragma once

#include <vector>

#include "fede/bspline.hpp"
#include "fede/linalg.hpp"

namespace fede {

/// Compressed sparse row matrix, just enough for the wavelet transforms.
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

  void append_row(const std::vector<std::pair<std::size_t, double>>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return vals_.size(); }

  Vector apply(const Vector& x) const;
  Vector apply_transpose(const Vector& x) const;
  DenseMatrix dense() const;
  SparseMatrix scaled(double factor) const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::size_t filled_ = 0;
  std::vector<std::size_t> row_ptr_;
  std::vector<std::size_t> col_idx_;
  std::vector<double> vals_;
};

/// The two row blocks of the one-level transform P_k, before the 2^{-(k-1)mu}
/// wavelet scaling: scaling rows express Phi_{k-1} in Phi_k, wavelet rows
/// express Gamma_{k-1} in Phi_k.
struct OneLevelBlocks {
  SparseMatrix scaling;
  SparseMatrix wavelet;
};
OneLevelBlocks one_level_blocks(const WaveletBasisSpec& spec, int k);

/// Square one-level matrix (Phi_{k-1}; 2^{-(k-1)mu} Gamma_{k-1}) = P_k Phi_k.
SparseMatrix one_level_1d(const WaveletBasisSpec& spec, int k);

/// 2D one-level matrix with row blocks [PhiPhi; s Phi x Psi; s Psi x Phi;
/// s Psi x Psi], s = 2^{-(k-1)mu}, x index slowest.
SparseMatrix one_level_2d(const WaveletBasisSpec& spec, int k);

/// Multilevel wavelet transform S_n (1D) or S~_n (2D), stored as the
/// one-level factors and applied as the level cascade in O(dimension).
class TransformMatrix {
public:
  static TransformMatrix multilevel_1d(const WaveletBasisSpec& spec, int n);
  static TransformMatrix multilevel_2d(const WaveletBasisSpec& spec, int n);

  std::size_t dim() const { return dim_; }
  int coarsest_level() const { return spec_.n0; }
  int level() const { return n_; }
  int dimension() const { return two_d_ ? 2 : 1; }
  double mu() const { return spec_.mu; }
  std::size_t nnz() const;

  Vector apply(const Vector& x) const;
  Vector apply_transpose(const Vector& x) const;
  DenseMatrix dense() const;

private:
  WaveletBasisSpec spec_{};
  int n_ = 0;
  bool two_d_ = false;
  std::size_t dim_ = 0;
  std::vector<OneLevelBlocks> levels_;  // k = n0+1, ..., n
};

TransformMatrix multilevel_1d(const WaveletBasisSpec& spec, int n);
TransformMatrix multilevel_2d(const WaveletBasisSpec& spec, int n);
Vector fast_apply(const TransformMatrix& t, const Vector& x);
Vector fast_apply_transpose(const TransformMatrix& t, const Vector& x);

/// S A S^T, materialized densely (condition-number computations).
DenseMatrix transform_congruence(const TransformMatrix& s, const DenseMatrix& a);

}  // namespace fede
