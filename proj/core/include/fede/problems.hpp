#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fede/assembly.hpp"
#include "fede/solvers.hpp"

namespace fede {

/// A named steady-state problem instance: the bilinear form parameters, the
/// forcing as power terms, and (when known) the exact solution.
struct ProblemSpec {
  int dimension = 1;
  std::string name;
  FractionalForm1D form1d;
  FractionalForm2D form2d;
  std::vector<PowerTerm> forcing;
  std::vector<SeparableTerm> forcing2d;
  std::vector<PowerTerm> exact;
  std::vector<SeparableTerm> exact2d;
  double lambda = 0.0;
};

/// u = x^2 - x^3, f = -2 x^beta / Gamma(beta+1) + 6 x^{beta+1} / Gamma(beta+2),
/// with p = 1, q = 0, a = 1.
ProblemSpec make_f1(double beta);

/// u = x^lambda - x,
/// f = -Gamma(lambda+1) x^{lambda+beta-2} / Gamma(lambda+beta-1) + x^{beta-1} / Gamma(beta).
ProblemSpec make_f2(double beta, double lambda);

/// 2D problem of order s with alpha = beta = 3/4, p1 = p2 = 1, a1 = a2 = 1,
/// exact solution u = x^2 (1-x)^2 y^2 (1-y)^2.
ProblemSpec make_fs(int s);

/// || u_n - u ||_{L^2} by per-cell Gauss-Legendre quadrature with
/// (spline degree + 6) points per cell and direction.
double l2_error(const Vector& coeffs, const std::vector<PowerTerm>& exact,
                const WaveletBasisSpec& spec, int n);
double l2_error(const Vector& coeffs, const std::vector<SeparableTerm>& exact,
                const WaveletBasisSpec& spec, int n);

/// Pointwise evaluation of the Galerkin expansion (testing helper).
double eval_expansion_1d(const Vector& coeffs, const WaveletBasisSpec& spec, int n, double x);
double eval_expansion_2d(const Vector& coeffs, const WaveletBasisSpec& spec, int n, double x,
                         double y);

enum class SolverKind { lu, bicgstab, pre_bicgstab, gmres, pre_gmres };
SolverKind solver_from_name(const std::string& name);
std::string solver_name(SolverKind kind);

struct SolveResult {
  SolverReport report;
  Vector coeffs;                 // over the single-scale basis Phi_n
  std::optional<double> l2;     // against the exact solution, when known
  std::size_t size = 0;
};

/// Assemble and solve at level n. Krylov runs use the FFT Toeplitz (1D) or
/// Kronecker-sum (2D) application; lu densifies (desk scale only).
SolveResult solve_problem(const ProblemSpec& problem, int n, SolverKind solver,
                          SolverConfig config = {});

/// The wavelet basis spec the experiments use: mu = 1 - beta/2 in 1D and
/// mu = (s + 1 - alpha)/2 in 2D.
WaveletBasisSpec experiment_basis_1d(const FractionalForm1D& form);
WaveletBasisSpec experiment_basis_2d(const FractionalForm2D& form);

}  // namespace fede
