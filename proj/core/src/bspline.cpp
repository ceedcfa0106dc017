#include "fede/bspline.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fede {

WaveletBasisSpec make_basis_spec(int r, double mu) {
  if (r != 2 && r != 3)
    throw std::invalid_argument("make_basis_spec: only spline orders r = 2 and r = 3 are supported");
  if (!(mu > 0.0 && mu < r - 0.5))
    throw std::invalid_argument("make_basis_spec: need 0 < mu < r - 1/2");
  int t = (r == 2) ? 2 : 1;
  int n0 = 0;
  while ((1 << n0) < r + t) ++n0;
  return WaveletBasisSpec{r, t, n0, mu};
}

const CoefficientTable& coefficient_table(int r) {
  static const CoefficientTable table_r2{
      {1.0 / 2.0, 1.0, 1.0 / 2.0},
      {1.0 / 24.0, -1.0 / 4.0, 5.0 / 12.0, -1.0 / 4.0, 1.0 / 24.0},
      {3.0 / 8.0, -1.0 / 4.0, 1.0 / 24.0}};
  static const CoefficientTable table_r3{
      {1.0 / 4.0, 3.0 / 4.0, 3.0 / 4.0, 1.0 / 4.0},
      {1.0 / 12.0, -5.0 / 12.0, 5.0 / 12.0, -1.0 / 12.0},
      {5.0 / 12.0, -1.0 / 12.0}};
  if (r == 2) return table_r2;
  if (r == 3) return table_r3;
  throw std::invalid_argument("coefficient_table: r must be 2 or 3");
}

double eval_bspline(int m, double x) {
  if (m < 1) throw std::invalid_argument("eval_bspline: order must be >= 1");
  if (x < 0.0 || x > m) return 0.0;
  switch (m) {
    case 1:
      return 1.0;  // closed convention on [0,1]
    case 2:
      return (x <= 1.0) ? x : 2.0 - x;
    case 3:
      if (x <= 1.0) return 0.5 * x * x;
      if (x <= 2.0) return -x * x + 3.0 * x - 1.5;
      return 0.5 * x * x - 3.0 * x + 4.5;
    default:
      return (x * eval_bspline(m - 1, x) + (m - x) * eval_bspline(m - 1, x - 1.0)) /
             static_cast<double>(m - 1);
  }
}

PiecewisePolynomial bspline_pp(int m) {
  if (m < 1 || m > 12) throw std::invalid_argument("bspline_pp: order must be in [1, 12]");
  if (m == 1) return PiecewisePolynomial({0.0, 1.0}, {{1.0}});
  if (m == 2) return PiecewisePolynomial({0.0, 1.0, 2.0}, {{0.0, 1.0}, {1.0, -1.0}});
  if (m == 3)
    return PiecewisePolynomial({0.0, 1.0, 2.0, 3.0},
                               {{0.0, 0.0, 0.5}, {0.5, 1.0, -1.0}, {0.5, -1.0, 0.5}});
  // M_m(x) = F(x) - F(x-1) with F the antiderivative of M_{m-1}, extended
  // by its constant value 1 far enough to cover the shifted copy
  PiecewisePolynomial prev = bspline_pp(m - 1);
  PiecewisePolynomial f = prev.antiderivative();
  std::vector<double> bp = f.breakpoints();
  std::vector<std::vector<double>> cf = f.coefficients();
  bp.push_back(static_cast<double>(m + 1));
  cf.push_back({1.0});
  PiecewisePolynomial fext(bp, cf);
  PiecewisePolynomial diff = pp_combine({{1.0, fext}, {-1.0, fext.scale_shift(1.0, 1.0, 1.0)}});
  // trim the zero tail cells introduced by the extension
  std::vector<double> tbp(diff.breakpoints().begin(), diff.breakpoints().begin() + m + 1);
  std::vector<std::vector<double>> tcf(diff.coefficients().begin(),
                                       diff.coefficients().begin() + m);
  return PiecewisePolynomial(std::move(tbp), std::move(tcf));
}

PiecewisePolynomial bspline_derivative(int m, int k) {
  if (m < 1) throw std::invalid_argument("bspline_derivative: order must be >= 1");
  if (k < 0) throw std::invalid_argument("bspline_derivative: negative derivative order");
  if (k >= m)
    throw std::invalid_argument(
        "bspline_derivative: k >= m is distributional; use dirac_jumps on the (m-1)-th derivative");
  return bspline_pp(m).derivative(k);
}

namespace {

void check_level(const WaveletBasisSpec& spec, int n) {
  if (n < spec.n0)
    throw std::invalid_argument("level n = " + std::to_string(n) + " below coarsest level n0 = " +
                                std::to_string(spec.n0));
}

PiecewisePolynomial dyadic_combination(int r, const std::vector<double>& mask) {
  PiecewisePolynomial base = bspline_pp(r);
  std::vector<std::pair<double, PiecewisePolynomial>> terms;
  terms.reserve(mask.size());
  for (std::size_t l = 0; l < mask.size(); ++l)
    terms.emplace_back(mask[l], base.scale_shift(1.0, 2.0, static_cast<double>(l)));
  return pp_combine(terms);
}

}  // namespace

PiecewisePolynomial interior_wavelet_pp(int r) {
  return dyadic_combination(r, coefficient_table(r).interior_wavelet);
}

PiecewisePolynomial boundary_wavelet_pp(int r) {
  return dyadic_combination(r, coefficient_table(r).boundary_wavelet);
}

PiecewisePolynomial scaled_basis_function(const WaveletBasisSpec& spec, int n, int j) {
  check_level(spec, n);
  int jmax = (1 << n) - spec.r;
  if (j < 0 || j > jmax)
    throw std::out_of_range("scaled_basis_function: index j outside I_n");
  double amp = std::pow(2.0, 0.5 * n);
  return bspline_pp(spec.r).scale_shift(amp, std::pow(2.0, n), static_cast<double>(j));
}

PiecewisePolynomial wavelet_function(const WaveletBasisSpec& spec, int n, int j) {
  check_level(spec, n);
  int top = 1 << n;
  if (j < 1 || j > top) throw std::out_of_range("wavelet_function: index j outside J_n");
  double amp = std::pow(2.0, 0.5 * n);
  double lambda = std::pow(2.0, n);
  if (j == 1) return boundary_wavelet_pp(spec.r).scale_shift(amp, lambda, 0.0);
  if (j == top) {
    // 2^{n/2} psi_1(2^n (1 - x))
    PiecewisePolynomial h = boundary_wavelet_pp(spec.r).scale_shift(amp, lambda, 0.0);
    return h.reflect(1.0);
  }
  return interior_wavelet_pp(spec.r).scale_shift(amp, lambda, static_cast<double>(j - 2));
}

FineExpansion refinement_expansion(const WaveletBasisSpec& spec, int n, int j) {
  check_level(spec, n);
  int jmax = (1 << n) - spec.r;
  if (j < 0 || j > jmax) throw std::out_of_range("refinement_expansion: index j outside I_n");
  const auto& mask = coefficient_table(spec.r).refinement;
  FineExpansion e;
  e.first_column = 2 * j;
  e.coeffs.resize(mask.size());
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t l = 0; l < mask.size(); ++l) e.coeffs[l] = s * mask[l];
  return e;
}

FineExpansion wavelet_expansion(const WaveletBasisSpec& spec, int n, int j) {
  check_level(spec, n);
  int top = 1 << n;
  if (j < 1 || j > top) throw std::out_of_range("wavelet_expansion: index j outside J_n");
  const auto& table = coefficient_table(spec.r);
  const double s = 1.0 / std::sqrt(2.0);
  FineExpansion e;
  if (j == 1) {
    e.first_column = 0;
    for (double c : table.boundary_wavelet) e.coeffs.push_back(s * c);
  } else if (j == top) {
    // columns 2^{n+1} - r - l for l = 0,..,len-1, emitted left to right
    int len = static_cast<int>(table.boundary_wavelet.size());
    e.first_column = 2 * top - spec.r - (len - 1);
    for (int l = len - 1; l >= 0; --l) e.coeffs.push_back(s * table.boundary_wavelet[l]);
  } else {
    e.first_column = 2 * j - 4;
    for (double c : table.interior_wavelet) e.coeffs.push_back(s * c);
  }
  return e;
}

}  // namespace fede
