#include "fede/toeplitz.hpp"

#include <stdexcept>

#include "fede/fft.hpp"

namespace fede {

namespace {

std::vector<std::complex<double>> embed_circulant(const Vector& col, const Vector& row,
                                                  std::size_t fft_len) {
  // circulant first column: [col, 0 padding, row[m-1], ..., row[1]]
  std::vector<std::complex<double>> c(fft_len, 0.0);
  std::size_t m = col.size();
  for (std::size_t k = 0; k < m; ++k) c[k] = col[k];
  for (std::size_t d = 1; d < m; ++d)
    if (row[d] != 0.0) c[fft_len - d] = row[d];
  fft_forward(c);
  return c;
}

}  // namespace

ToeplitzOperator::ToeplitzOperator(Vector first_column, Vector first_row)
    : col_(std::move(first_column)), row_(std::move(first_row)) {
  if (col_.empty() || col_.size() != row_.size())
    throw std::invalid_argument("ToeplitzOperator: column/row length mismatch");
  if (col_[0] != row_[0])
    throw std::invalid_argument("ToeplitzOperator: first column and first row must agree at 0");
  fft_len_ = next_pow2(2 * col_.size());
  spectrum_ = embed_circulant(col_, row_, fft_len_);
}

DenseMatrix ToeplitzOperator::dense() const {
  std::size_t m = dim();
  DenseMatrix a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = entry(i, j);
  return a;
}

Vector ToeplitzOperator::apply(const Vector& y) const {
  std::size_t m = dim();
  if (y.size() != m) throw std::invalid_argument("ToeplitzOperator::apply: size mismatch");
  std::vector<std::complex<double>> t(fft_len_, 0.0);
  for (std::size_t k = 0; k < m; ++k) t[k] = y[k];
  fft_forward(t);
  for (std::size_t k = 0; k < fft_len_; ++k) t[k] *= spectrum_[k];
  fft_inverse(t);
  Vector out(m);
  for (std::size_t k = 0; k < m; ++k) out[k] = t[k].real();
  return out;
}

FastToeplitz::FastToeplitz(Vector col, Vector row, double a, double p, double q)
    : col_(std::move(col)), row_(std::move(row)), a_(a), p_(p), q_(q) {
  if (col_.empty()) throw std::invalid_argument("FastToeplitz: empty column generator");
  if (row_.size() > col_.size())
    throw std::invalid_argument("FastToeplitz: row generator longer than dimension");
  row_.resize(col_.size(), 0.0);
  if (row_[0] != col_[0])
    throw std::invalid_argument("FastToeplitz: generators must agree at lag 0");
  fft_len_ = next_pow2(2 * col_.size());
  spectrum_ = embed_circulant(col_, row_, fft_len_);
}

Vector FastToeplitz::apply_weights(const Vector& y, double wp, double wq) const {
  std::size_t m = dim();
  if (y.size() != m) throw std::invalid_argument("FastToeplitz::apply: size mismatch");
  std::vector<std::complex<double>> t(fft_len_, 0.0);
  for (std::size_t k = 0; k < m; ++k) t[k] = {y[k], y[m - 1 - k]};
  fft_forward(t);
  for (std::size_t k = 0; k < fft_len_; ++k) t[k] *= spectrum_[k];
  fft_inverse(t);
  Vector out(m);
  for (std::size_t k = 0; k < m; ++k)
    out[k] = a_ * (wp * t[k].real() + wq * t[m - 1 - k].imag());
  return out;
}

Vector FastToeplitz::apply(const Vector& y) const { return apply_weights(y, p_, q_); }
Vector FastToeplitz::apply_transpose(const Vector& y) const { return apply_weights(y, q_, p_); }

double FastToeplitz::entry(std::size_t i, std::size_t j) const {
  double tij = (i >= j) ? col_[i - j] : row_[j - i];  // T(col,row)
  double tji = (j >= i) ? col_[j - i] : row_[i - j];  // T(row,col)
  return a_ * (p_ * tij + q_ * tji);
}

DenseMatrix FastToeplitz::dense() const {
  std::size_t m = dim();
  DenseMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = entry(i, j);
  return out;
}

ToeplitzOperator FastToeplitz::toeplitz() const {
  std::size_t m = dim();
  Vector col(m), row(m);
  for (std::size_t k = 0; k < m; ++k) {
    col[k] = a_ * (p_ * col_[k] + q_ * row_[k]);
    row[k] = a_ * (p_ * row_[k] + q_ * col_[k]);
  }
  return ToeplitzOperator(std::move(col), std::move(row));
}

Vector toeplitz_matvec_fft(const Vector& a1, const Vector& q1, const Vector& y, double a,
                           double p, double q) {
  if (y.size() != q1.size())
    throw std::invalid_argument("toeplitz_matvec_fft: vector size must match the column generator");
  return FastToeplitz(q1, a1, a, p, q).apply(y);
}

void KroneckerSumOperator::add_term(FastToeplitz left, FastToeplitz right) {
  if (!terms_.empty() &&
      (left.dim() != terms_.front().first.dim() || right.dim() != terms_.front().second.dim()))
    throw std::invalid_argument("KroneckerSumOperator: factor dimensions must conform");
  terms_.emplace_back(std::move(left), std::move(right));
}

std::size_t KroneckerSumOperator::left_dim() const {
  return terms_.empty() ? 0 : terms_.front().first.dim();
}
std::size_t KroneckerSumOperator::right_dim() const {
  return terms_.empty() ? 0 : terms_.front().second.dim();
}
std::size_t KroneckerSumOperator::dim() const { return left_dim() * right_dim(); }

Vector KroneckerSumOperator::apply(const Vector& y) const {
  std::size_t m1 = left_dim(), m2 = right_dim();
  if (y.size() != m1 * m2) throw std::invalid_argument("KroneckerSumOperator: size mismatch");
  Vector out(y.size(), 0.0);
  Vector rowbuf(m2), colbuf(m1);
  Vector z(y.size());
  for (const auto& [left, right] : terms_) {
    // (L (x) R) vec(Y) = vec(L Y R^T) with the x index slowest
    for (std::size_t i = 0; i < m1; ++i) {
      std::copy(y.begin() + i * m2, y.begin() + (i + 1) * m2, rowbuf.begin());
      Vector t = right.apply(rowbuf);  // row of Y R^T = R (row of Y)
      std::copy(t.begin(), t.end(), z.begin() + i * m2);
    }
    for (std::size_t j = 0; j < m2; ++j) {
      for (std::size_t i = 0; i < m1; ++i) colbuf[i] = z[i * m2 + j];
      Vector t = left.apply(colbuf);
      for (std::size_t i = 0; i < m1; ++i) out[i * m2 + j] += t[i];
    }
  }
  return out;
}

DenseMatrix KroneckerSumOperator::dense() const {
  std::size_t m1 = left_dim(), m2 = right_dim(), n = dim();
  DenseMatrix c(n, n);
  for (const auto& [left, right] : terms_) {
    DenseMatrix l = left.dense(), r = right.dense();
    for (std::size_t i1 = 0; i1 < m1; ++i1)
      for (std::size_t j1 = 0; j1 < m1; ++j1) {
        double lij = l(i1, j1);
        if (lij == 0.0) continue;
        for (std::size_t i2 = 0; i2 < m2; ++i2) {
          const double* rrow = r.data() + i2 * m2;
          double* crow = c.data() + (i1 * m2 + i2) * n + j1 * m2;
          for (std::size_t j2 = 0; j2 < m2; ++j2) crow[j2] += lij * rrow[j2];
        }
      }
  }
  return c;
}

Vector kron_sum_matvec(const KroneckerSumOperator& op, const Vector& y) { return op.apply(y); }

}  // namespace fede
