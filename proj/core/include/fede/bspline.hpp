#pragma once

#include <vector>

#include "fede/piecewise.hpp"

namespace fede {

/// Fixes the spline/wavelet basis family on (0,1): spline order r, dual
/// order t, coarsest level n0 (least n with 2^n >= r+t) and the Sobolev
/// exponent mu used for the level scaling of the wavelet blocks.
struct WaveletBasisSpec {
  int r;
  int t;
  int n0;
  double mu;
};

/// Validates r in {2,3} and 0 < mu < r - 1/2.
WaveletBasisSpec make_basis_spec(int r, double mu);

/// Refinement mask of M_r plus the interior/boundary wavelet masks in the
/// half-scale splines M_r(2x - l).
struct CoefficientTable {
  std::vector<double> refinement;
  std::vector<double> interior_wavelet;
  std::vector<double> boundary_wavelet;
};
const CoefficientTable& coefficient_table(int r);

/// Cardinal B-spline M_m(x), supported on [0, m]. m in {1,2,3} is exact
/// piecewise evaluation, higher orders use the de Boor recursion.
double eval_bspline(int m, double x);

/// Exact piecewise-polynomial form of M_m (m <= 12).
PiecewisePolynomial bspline_pp(int m);

/// d^k M_m / dx^k for k <= m-1. The k = m case is distributional; take
/// dirac_jumps of the (m-1)-th derivative instead.
PiecewisePolynomial bspline_derivative(int m, int k);

/// phi_{n,j}(x) = 2^{n/2} M_r(2^n x - j), j in I_n = {0,...,2^n - r}.
PiecewisePolynomial scaled_basis_function(const WaveletBasisSpec& spec, int n, int j);

/// psi_{n,j} for j in J_n = {1,...,2^n}: left boundary wavelet at j = 1,
/// interior translates for 2 <= j <= 2^n - 1, reflected boundary wavelet
/// at j = 2^n.
PiecewisePolynomial wavelet_function(const WaveletBasisSpec& spec, int n, int j);

/// Expansion of a basis function over the next-finer single-scale basis:
/// coefficients c with f = sum_l c[l] phi_{n+1, first_column + l}.
struct FineExpansion {
  int first_column;
  std::vector<double> coeffs;
};
/// phi_{n,j} in terms of phi_{n+1,.} (refinement rows of the transform).
FineExpansion refinement_expansion(const WaveletBasisSpec& spec, int n, int j);
/// psi_{n,j} in terms of phi_{n+1,.} (wavelet rows of the transform).
FineExpansion wavelet_expansion(const WaveletBasisSpec& spec, int n, int j);

/// Unit-scale mother wavelets psi(x) and psi_1(x) as piecewise polynomials.
PiecewisePolynomial interior_wavelet_pp(int r);
PiecewisePolynomial boundary_wavelet_pp(int r);

}  // namespace fede
