#pragma once

#include <vector>

#include "fede/bspline.hpp"
#include "fede/fractional.hpp"
#include "fede/toeplitz.hpp"

namespace fede {

/// -D a (p 0D^{-beta} + q xD1^{-beta}) D u = f on (0,1), u(0) = u(1) = 0.
struct FractionalForm1D {
  double a = 1.0;
  double p = 0.5;
  double q = 0.5;
  double beta = 0.5;
  int r = 2;
  int n = 3;
};
void validate(const FractionalForm1D& form);

/// -D_x^s a1 (p1 0Dx^{-alpha} + q1 xD1^{-alpha}) D_x u
/// -D_y^s a2 (p2 0Dy^{-beta} + q2 yD1^{-beta}) D_y u = f on (0,1)^2.
struct FractionalForm2D {
  int s = 2;
  double a1 = 1.0;
  double a2 = 1.0;
  double p1 = 1.0;
  double q1 = 0.0;
  double p2 = 1.0;
  double q2 = 0.0;
  double alpha = 0.75;
  double beta = 0.75;
  int r = 3;
  int n = 4;
};
void validate(const FractionalForm2D& form);

inline int basis_dim_1d(int r, int n) { return (1 << n) - r + 1; }

/// Generator vectors of Algorithm 1:
///   a1[i] = <0D^{-beta} phi'_{n,i}, phi'_{n,0}>, i = 0..r-1 (zero beyond),
///   q1[j] = <0D^{-beta} phi'_{n,0}, phi'_{n,j}>, j = 0..2^n-r.
struct StiffnessGenerators {
  Vector a1;
  Vector q1;
};
StiffnessGenerators stiffness_generators_1d(const FractionalForm1D& form);

/// A_n = a p T(q1, a1) + a q T(a1, q1), a single Toeplitz operator.
ToeplitzOperator assemble_A(const FractionalForm1D& form);
/// Same operator with the Algorithm-3 combined FFT application.
FastToeplitz assemble_A_fast(const FractionalForm1D& form);

/// Toeplitz generators of G[i][j] = <D^{s-1} 0D^{-alpha} D phi_{n,j}, D phi_{n,i}>
/// for the r = 3 basis. s = 2 pairs the fractional profile with phi'',
/// s = 3 pairs it with the Dirac jumps of phi'' (distributional derivative).
struct ToeplitzGenerators {
  Vector col;
  Vector row;
};
ToeplitzGenerators highorder_generators_1d(int s, double alpha, int r, int n);

/// Gram generators <phi_{n,j}, phi_{n,i}>; independent of n.
ToeplitzGenerators mass_generators_1d(int r, int n);

/// C_n^s = a1 (p1 G_a + q1 G_a^T) (x) M  +  M (x) a2 (p2 G_b + q2 G_b^T),
/// flattened with the x index slowest.
KroneckerSumOperator assemble_C2d(const FractionalForm2D& form);

/// coef * (x - knot)_+^exponent; forcing terms (knot = 0 for the plain
/// power families f1, f2, f_s).
struct PowerTerm {
  double coef;
  double exponent;
  double knot = 0.0;
};

/// Entries <f, phi_{n,j}> by exact per-cell integration. Terms with
/// exponent <= -1 are admitted only where the basis vanishes to sufficient
/// order at the term's knot; otherwise a domain_error is raised.
Vector load_vector_1d(const std::vector<PowerTerm>& f, const WaveletBasisSpec& spec, int n);

/// Separable 2D forcing: sum of products fx(x) * fy(y).
struct SeparableTerm {
  std::vector<PowerTerm> x_factor;
  std::vector<PowerTerm> y_factor;
};
Vector load_vector_2d(const std::vector<SeparableTerm>& f, const WaveletBasisSpec& spec, int n);

}  // namespace fede
