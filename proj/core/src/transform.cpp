#include "fede/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace fede {

void SparseMatrix::append_row(const std::vector<std::pair<std::size_t, double>>& entries) {
  if (filled_ >= rows_) throw std::logic_error("SparseMatrix: too many rows appended");
  for (const auto& [j, v] : entries) {
    if (j >= cols_) throw std::out_of_range("SparseMatrix: column index out of range");
    if (v == 0.0) continue;
    col_idx_.push_back(j);
    vals_.push_back(v);
  }
  ++filled_;
  row_ptr_[filled_] = vals_.size();
}

Vector SparseMatrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("SparseMatrix::apply: size mismatch");
  Vector y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) s += vals_[k] * x[col_idx_[k]];
    y[i] = s;
  }
  return y;
}

Vector SparseMatrix::apply_transpose(const Vector& x) const {
  if (x.size() != rows_) throw std::invalid_argument("SparseMatrix::apply_transpose: size mismatch");
  Vector y(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double xi = x[i];
    if (xi == 0.0) continue;
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) y[col_idx_[k]] += vals_[k] * xi;
  }
  return y;
}

DenseMatrix SparseMatrix::dense() const {
  DenseMatrix d(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) d(i, col_idx_[k]) = vals_[k];
  return d;
}

SparseMatrix SparseMatrix::scaled(double factor) const {
  SparseMatrix s = *this;
  for (double& v : s.vals_) v *= factor;
  return s;
}

OneLevelBlocks one_level_blocks(const WaveletBasisSpec& spec, int k) {
  if (k <= spec.n0) throw std::invalid_argument("one_level transform requires k > n0");
  std::size_t fine = static_cast<std::size_t>((1 << k) - spec.r + 1);
  std::size_t coarse = static_cast<std::size_t>((1 << (k - 1)) - spec.r + 1);
  std::size_t wavelets = static_cast<std::size_t>(1 << (k - 1));

  OneLevelBlocks blocks{SparseMatrix(coarse, fine), SparseMatrix(wavelets, fine)};
  std::vector<std::pair<std::size_t, double>> row;
  for (std::size_t j = 0; j < coarse; ++j) {
    FineExpansion e = refinement_expansion(spec, k - 1, static_cast<int>(j));
    row.clear();
    for (std::size_t l = 0; l < e.coeffs.size(); ++l)
      row.emplace_back(static_cast<std::size_t>(e.first_column) + l, e.coeffs[l]);
    blocks.scaling.append_row(row);
  }
  for (std::size_t j = 1; j <= wavelets; ++j) {
    FineExpansion e = wavelet_expansion(spec, k - 1, static_cast<int>(j));
    row.clear();
    for (std::size_t l = 0; l < e.coeffs.size(); ++l)
      row.emplace_back(static_cast<std::size_t>(e.first_column) + l, e.coeffs[l]);
    blocks.wavelet.append_row(row);
  }
  return blocks;
}

SparseMatrix one_level_1d(const WaveletBasisSpec& spec, int k) {
  OneLevelBlocks blocks = one_level_blocks(spec, k);
  double s = std::pow(2.0, -(k - 1) * spec.mu);
  std::size_t fine = blocks.scaling.cols();
  SparseMatrix p(blocks.scaling.rows() + blocks.wavelet.rows(), fine);
  DenseMatrix top = blocks.scaling.dense();
  DenseMatrix bottom = blocks.wavelet.scaled(s).dense();
  std::vector<std::pair<std::size_t, double>> row;
  for (std::size_t i = 0; i < top.rows(); ++i) {
    row.clear();
    for (std::size_t j = 0; j < fine; ++j)
      if (top(i, j) != 0.0) row.emplace_back(j, top(i, j));
    p.append_row(row);
  }
  for (std::size_t i = 0; i < bottom.rows(); ++i) {
    row.clear();
    for (std::size_t j = 0; j < fine; ++j)
      if (bottom(i, j) != 0.0) row.emplace_back(j, bottom(i, j));
    p.append_row(row);
  }
  return p;
}

SparseMatrix one_level_2d(const WaveletBasisSpec& spec, int k) {
  OneLevelBlocks b = one_level_blocks(spec, k);
  double s = std::pow(2.0, -(k - 1) * spec.mu);
  std::size_t fine = b.scaling.cols();
  std::size_t n2 = fine * fine;

  DenseMatrix phi = b.scaling.dense();
  DenseMatrix psi = b.wavelet.dense();

  SparseMatrix p(n2, n2);
  std::vector<std::pair<std::size_t, double>> row;
  auto emit_block = [&](const DenseMatrix& left, const DenseMatrix& right, double factor) {
    for (std::size_t i1 = 0; i1 < left.rows(); ++i1)
      for (std::size_t i2 = 0; i2 < right.rows(); ++i2) {
        row.clear();
        for (std::size_t j1 = 0; j1 < fine; ++j1) {
          double l = left(i1, j1);
          if (l == 0.0) continue;
          for (std::size_t j2 = 0; j2 < fine; ++j2) {
            double v = l * right(i2, j2);
            if (v != 0.0) row.emplace_back(j1 * fine + j2, factor * v);
          }
        }
        p.append_row(row);
      }
  };
  emit_block(phi, phi, 1.0);
  emit_block(phi, psi, s);
  emit_block(psi, phi, s);
  emit_block(psi, psi, s);
  return p;
}

TransformMatrix TransformMatrix::multilevel_1d(const WaveletBasisSpec& spec, int n) {
  if (n < spec.n0) throw std::invalid_argument("multilevel_1d: level below coarsest level");
  TransformMatrix t;
  t.spec_ = spec;
  t.n_ = n;
  t.two_d_ = false;
  t.dim_ = static_cast<std::size_t>((1 << n) - spec.r + 1);
  for (int k = spec.n0 + 1; k <= n; ++k) t.levels_.push_back(one_level_blocks(spec, k));
  return t;
}

TransformMatrix TransformMatrix::multilevel_2d(const WaveletBasisSpec& spec, int n) {
  TransformMatrix t = multilevel_1d(spec, n);
  t.two_d_ = true;
  t.dim_ = t.dim_ * t.dim_;
  return t;
}

std::size_t TransformMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& b : levels_) total += b.scaling.nnz() + b.wavelet.nnz();
  return total;
}

namespace {

// V (m x m, row major) -> each row transformed: V M^T
DenseMatrix rows_apply(const SparseMatrix& m, const DenseMatrix& v) {
  DenseMatrix out(v.rows(), m.rows());
  Vector buf(v.cols());
  for (std::size_t i = 0; i < v.rows(); ++i) {
    std::copy(v.data() + i * v.cols(), v.data() + (i + 1) * v.cols(), buf.begin());
    Vector t = m.apply(buf);
    std::copy(t.begin(), t.end(), out.data() + i * out.cols());
  }
  return out;
}

// M V
DenseMatrix cols_apply(const SparseMatrix& m, const DenseMatrix& v) {
  DenseMatrix out(m.rows(), v.cols());
  Vector buf(v.rows()), t;
  for (std::size_t j = 0; j < v.cols(); ++j) {
    for (std::size_t i = 0; i < v.rows(); ++i) buf[i] = v(i, j);
    t = m.apply(buf);
    for (std::size_t i = 0; i < out.rows(); ++i) out(i, j) = t[i];
  }
  return out;
}

DenseMatrix rows_apply_transpose(const SparseMatrix& m, const DenseMatrix& v) {
  DenseMatrix out(v.rows(), m.cols());
  Vector buf(v.cols());
  for (std::size_t i = 0; i < v.rows(); ++i) {
    std::copy(v.data() + i * v.cols(), v.data() + (i + 1) * v.cols(), buf.begin());
    Vector t = m.apply_transpose(buf);
    std::copy(t.begin(), t.end(), out.data() + i * out.cols());
  }
  return out;
}

DenseMatrix cols_apply_transpose(const SparseMatrix& m, const DenseMatrix& v) {
  DenseMatrix out(m.cols(), v.cols());
  Vector buf(v.rows()), t;
  for (std::size_t j = 0; j < v.cols(); ++j) {
    for (std::size_t i = 0; i < v.rows(); ++i) buf[i] = v(i, j);
    t = m.apply_transpose(buf);
    for (std::size_t i = 0; i < out.rows(); ++i) out(i, j) = t[i];
  }
  return out;
}

DenseMatrix reshape(const Vector& v, std::size_t rows, std::size_t cols) {
  DenseMatrix m(rows, cols);
  std::copy(v.begin(), v.end(), m.data());
  return m;
}

void add_scaled(DenseMatrix& acc, const DenseMatrix& d, double s) {
  for (std::size_t i = 0; i < acc.rows() * acc.cols(); ++i) acc.data()[i] += s * d.data()[i];
}

}  // namespace

Vector TransformMatrix::apply(const Vector& x) const {
  if (x.size() != dim_) throw std::invalid_argument("TransformMatrix::apply: size mismatch");
  double coarse_scale = std::pow(2.0, -spec_.n0 * spec_.mu);
  Vector out(dim_);

  if (!two_d_) {
    Vector v = x;
    for (int k = n_; k > spec_.n0; --k) {
      const OneLevelBlocks& b = levels_[static_cast<std::size_t>(k - spec_.n0 - 1)];
      double s = std::pow(2.0, -(k - 1) * spec_.mu);
      Vector w = b.wavelet.apply(v);
      std::size_t off = b.scaling.rows();  // = dim at level k-1
      for (std::size_t i = 0; i < w.size(); ++i) out[off + i] = s * w[i];
      v = b.scaling.apply(v);
    }
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = coarse_scale * v[i];
    return out;
  }

  std::size_t m = static_cast<std::size_t>((1 << n_) - spec_.r + 1);
  DenseMatrix v = reshape(x, m, m);
  for (int k = n_; k > spec_.n0; --k) {
    const OneLevelBlocks& b = levels_[static_cast<std::size_t>(k - spec_.n0 - 1)];
    double s = std::pow(2.0, -(k - 1) * spec_.mu);
    std::size_t mc = b.scaling.rows();
    std::size_t w = b.wavelet.rows();
    DenseMatrix rphi = rows_apply(b.scaling, v);
    DenseMatrix rpsi = rows_apply(b.wavelet, v);
    DenseMatrix phiphi = cols_apply(b.scaling, rphi);
    DenseMatrix phipsi = cols_apply(b.scaling, rpsi);
    DenseMatrix psiphi = cols_apply(b.wavelet, rphi);
    DenseMatrix psipsi = cols_apply(b.wavelet, rpsi);
    std::size_t off = mc * mc;
    for (std::size_t i = 0; i < mc * w; ++i) out[off + i] = s * phipsi.data()[i];
    off += mc * w;
    for (std::size_t i = 0; i < w * mc; ++i) out[off + i] = s * psiphi.data()[i];
    off += w * mc;
    for (std::size_t i = 0; i < w * w; ++i) out[off + i] = s * psipsi.data()[i];
    v = std::move(phiphi);
  }
  for (std::size_t i = 0; i < v.rows() * v.cols(); ++i) out[i] = coarse_scale * v.data()[i];
  return out;
}

Vector TransformMatrix::apply_transpose(const Vector& x) const {
  if (x.size() != dim_) throw std::invalid_argument("TransformMatrix::apply_transpose: size mismatch");
  double coarse_scale = std::pow(2.0, -spec_.n0 * spec_.mu);

  if (!two_d_) {
    std::size_t m0 = static_cast<std::size_t>((1 << spec_.n0) - spec_.r + 1);
    Vector v(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m0));
    for (double& c : v) c *= coarse_scale;
    for (int k = spec_.n0 + 1; k <= n_; ++k) {
      const OneLevelBlocks& b = levels_[static_cast<std::size_t>(k - spec_.n0 - 1)];
      double s = std::pow(2.0, -(k - 1) * spec_.mu);
      std::size_t off = b.scaling.rows();
      Vector wav(x.begin() + static_cast<std::ptrdiff_t>(off),
                 x.begin() + static_cast<std::ptrdiff_t>(off + b.wavelet.rows()));
      Vector fine = b.scaling.apply_transpose(v);
      Vector wfine = b.wavelet.apply_transpose(wav);
      for (std::size_t i = 0; i < fine.size(); ++i) fine[i] += s * wfine[i];
      v = std::move(fine);
    }
    return v;
  }

  std::size_t m0 = static_cast<std::size_t>((1 << spec_.n0) - spec_.r + 1);
  DenseMatrix v(m0, m0);
  for (std::size_t i = 0; i < m0 * m0; ++i) v.data()[i] = coarse_scale * x[i];
  for (int k = spec_.n0 + 1; k <= n_; ++k) {
    const OneLevelBlocks& b = levels_[static_cast<std::size_t>(k - spec_.n0 - 1)];
    double s = std::pow(2.0, -(k - 1) * spec_.mu);
    std::size_t mc = b.scaling.rows();
    std::size_t w = b.wavelet.rows();
    std::size_t off = mc * mc;
    Vector bphipsi(x.begin() + static_cast<std::ptrdiff_t>(off),
                   x.begin() + static_cast<std::ptrdiff_t>(off + mc * w));
    off += mc * w;
    Vector bpsiphi(x.begin() + static_cast<std::ptrdiff_t>(off),
                   x.begin() + static_cast<std::ptrdiff_t>(off + w * mc));
    off += w * mc;
    Vector bpsipsi(x.begin() + static_cast<std::ptrdiff_t>(off),
                   x.begin() + static_cast<std::ptrdiff_t>(off + w * w));

    DenseMatrix acc = cols_apply_transpose(b.scaling, rows_apply_transpose(b.scaling, v));
    add_scaled(acc, cols_apply_transpose(b.scaling, rows_apply_transpose(b.wavelet, reshape(bphipsi, mc, w))), s);
    add_scaled(acc, cols_apply_transpose(b.wavelet, rows_apply_transpose(b.scaling, reshape(bpsiphi, w, mc))), s);
    add_scaled(acc, cols_apply_transpose(b.wavelet, rows_apply_transpose(b.wavelet, reshape(bpsipsi, w, w))), s);
    v = std::move(acc);
  }
  Vector out(dim_);
  std::copy(v.data(), v.data() + dim_, out.begin());
  return out;
}

DenseMatrix TransformMatrix::dense() const {
  DenseMatrix d(dim_, dim_);
  Vector e(dim_, 0.0);
  for (std::size_t j = 0; j < dim_; ++j) {
    e[j] = 1.0;
    Vector col = apply(e);
    for (std::size_t i = 0; i < dim_; ++i) d(i, j) = col[i];
    e[j] = 0.0;
  }
  return d;
}

TransformMatrix multilevel_1d(const WaveletBasisSpec& spec, int n) {
  return TransformMatrix::multilevel_1d(spec, n);
}
TransformMatrix multilevel_2d(const WaveletBasisSpec& spec, int n) {
  return TransformMatrix::multilevel_2d(spec, n);
}
Vector fast_apply(const TransformMatrix& t, const Vector& x) { return t.apply(x); }
Vector fast_apply_transpose(const TransformMatrix& t, const Vector& x) {
  return t.apply_transpose(x);
}

DenseMatrix transform_congruence(const TransformMatrix& s, const DenseMatrix& a) {
  if (a.rows() != s.dim() || a.cols() != s.dim())
    throw std::invalid_argument("transform_congruence: dimension mismatch");
  std::size_t n = s.dim();
  // tmp = A S^T, row by row; then D = S tmp, column by column
  DenseMatrix tmp(n, n);
  Vector buf(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(a.data() + i * n, a.data() + (i + 1) * n, buf.begin());
    Vector t = s.apply(buf);
    std::copy(t.begin(), t.end(), tmp.data() + i * n);
  }
  DenseMatrix d(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) buf[i] = tmp(i, j);
    Vector t = s.apply(buf);
    for (std::size_t i = 0; i < n; ++i) d(i, j) = t[i];
  }
  return d;
}

}  // namespace fede
