#include "fede/problems.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace fede {

namespace {

double power_terms_eval(const std::vector<PowerTerm>& terms, double x) {
  double v = 0.0;
  for (const auto& t : terms)
    if (x > t.knot) v += t.coef * std::pow(x - t.knot, t.exponent);
  return v;
}

const std::vector<PowerTerm>& square_bump_terms() {
  // x^2 (1-x)^2 = x^2 - 2 x^3 + x^4
  static const std::vector<PowerTerm> terms{{1.0, 2.0}, {-2.0, 3.0}, {1.0, 4.0}};
  return terms;
}

}  // namespace

ProblemSpec make_f1(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("make_f1: beta must lie in (0,1)");
  ProblemSpec p;
  p.dimension = 1;
  p.name = "f1";
  p.form1d = FractionalForm1D{1.0, 1.0, 0.0, beta, 2, 3};
  p.forcing = {{-2.0 / std::tgamma(beta + 1.0), beta}, {6.0 / std::tgamma(beta + 2.0), beta + 1.0}};
  p.exact = {{1.0, 2.0}, {-1.0, 3.0}};
  return p;
}

ProblemSpec make_f2(double beta, double lambda) {
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("make_f2: beta must lie in (0,1)");
  if (!(lambda > 1.0)) throw std::invalid_argument("make_f2: lambda must exceed 1");
  ProblemSpec p;
  p.dimension = 1;
  p.name = "f2";
  p.lambda = lambda;
  p.form1d = FractionalForm1D{1.0, 1.0, 0.0, beta, 2, 3};
  p.forcing = {{-std::tgamma(lambda + 1.0) / std::tgamma(lambda + beta - 1.0), lambda + beta - 2.0},
               {1.0 / std::tgamma(beta), beta - 1.0}};
  p.exact = {{1.0, lambda}, {-1.0, 1.0}};
  return p;
}

ProblemSpec make_fs(int s) {
  if (s != 2 && s != 3) throw std::invalid_argument("make_fs: s must be 2 or 3");
  ProblemSpec p;
  p.dimension = 2;
  p.name = "fs";
  p.form2d = FractionalForm2D{s, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.75, 0.75, 3, 4};
  std::vector<PowerTerm> fterms{
      {-24.0 / std::tgamma(19.0 / 4.0 - s), 15.0 / 4.0 - s},
      {12.0 / std::tgamma(15.0 / 4.0 - s), 11.0 / 4.0 - s},
      {-2.0 / std::tgamma(11.0 / 4.0 - s), 7.0 / 4.0 - s}};
  p.forcing2d = {{fterms, square_bump_terms()}, {square_bump_terms(), fterms}};
  p.exact2d = {{square_bump_terms(), square_bump_terms()}};
  return p;
}

double eval_expansion_1d(const Vector& coeffs, const WaveletBasisSpec& spec, int n, double x) {
  int m = basis_dim_1d(spec.r, n);
  double scaled = std::ldexp(x, n);  // 2^n x
  int cell = static_cast<int>(std::floor(scaled));
  double amp = std::pow(2.0, 0.5 * n);
  double v = 0.0;
  for (int j = cell - spec.r + 1; j <= cell; ++j) {
    if (j < 0 || j >= m) continue;
    v += coeffs[static_cast<std::size_t>(j)] * amp * eval_bspline(spec.r, scaled - j);
  }
  return v;
}

double eval_expansion_2d(const Vector& coeffs, const WaveletBasisSpec& spec, int n, double x,
                         double y) {
  int m = basis_dim_1d(spec.r, n);
  double sx = std::ldexp(x, n), sy = std::ldexp(y, n);
  int cx = static_cast<int>(std::floor(sx)), cy = static_cast<int>(std::floor(sy));
  double amp = std::pow(2.0, 0.5 * n);
  double v = 0.0;
  for (int j1 = cx - spec.r + 1; j1 <= cx; ++j1) {
    if (j1 < 0 || j1 >= m) continue;
    double bx = amp * eval_bspline(spec.r, sx - j1);
    if (bx == 0.0) continue;
    for (int j2 = cy - spec.r + 1; j2 <= cy; ++j2) {
      if (j2 < 0 || j2 >= m) continue;
      v += coeffs[static_cast<std::size_t>(j1) * m + j2] * bx * amp * eval_bspline(spec.r, sy - j2);
    }
  }
  return v;
}

double l2_error(const Vector& coeffs, const std::vector<PowerTerm>& exact,
                const WaveletBasisSpec& spec, int n) {
  int m = basis_dim_1d(spec.r, n);
  if (coeffs.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("l2_error: coefficient count mismatch");
  int cells = 1 << n;
  double h = std::pow(2.0, -n);
  const auto& [gx, gw] = gauss_legendre_01(spec.r - 1 + 6);
  double acc = 0.0;
  for (int c = 0; c < cells; ++c) {
    double left = c * h;
    for (std::size_t q = 0; q < gx.size(); ++q) {
      double x = left + h * gx[q];
      double d = eval_expansion_1d(coeffs, spec, n, x) - power_terms_eval(exact, x);
      acc += gw[q] * h * d * d;
    }
  }
  return std::sqrt(acc);
}

double l2_error(const Vector& coeffs, const std::vector<SeparableTerm>& exact,
                const WaveletBasisSpec& spec, int n) {
  int m = basis_dim_1d(spec.r, n);
  if (coeffs.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(m))
    throw std::invalid_argument("l2_error: coefficient count mismatch");
  int cells = 1 << n;
  double h = std::pow(2.0, -n);
  const auto& [gx, gw] = gauss_legendre_01(spec.r - 1 + 6);
  std::size_t npts = gx.size();
  double acc = 0.0;
  for (int cxi = 0; cxi < cells; ++cxi) {
    for (int cyi = 0; cyi < cells; ++cyi) {
      for (std::size_t qx = 0; qx < npts; ++qx) {
        double x = cxi * h + h * gx[qx];
        for (std::size_t qy = 0; qy < npts; ++qy) {
          double y = cyi * h + h * gx[qy];
          double u = 0.0;
          for (const auto& t : exact)
            u += power_terms_eval(t.x_factor, x) * power_terms_eval(t.y_factor, y);
          double d = eval_expansion_2d(coeffs, spec, n, x, y) - u;
          acc += gw[qx] * gw[qy] * h * h * d * d;
        }
      }
    }
  }
  return std::sqrt(acc);
}

SolverKind solver_from_name(const std::string& name) {
  if (name == "lu") return SolverKind::lu;
  if (name == "bicgstab") return SolverKind::bicgstab;
  if (name == "pre-bicgstab") return SolverKind::pre_bicgstab;
  if (name == "gmres") return SolverKind::gmres;
  if (name == "pre-gmres") return SolverKind::pre_gmres;
  throw std::invalid_argument("unknown solver '" + name + "'");
}

std::string solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::lu: return "lu";
    case SolverKind::bicgstab: return "bicgstab";
    case SolverKind::pre_bicgstab: return "pre-bicgstab";
    case SolverKind::gmres: return "gmres";
    case SolverKind::pre_gmres: return "pre-gmres";
  }
  return "?";
}

WaveletBasisSpec experiment_basis_1d(const FractionalForm1D& form) {
  return make_basis_spec(form.r, 1.0 - form.beta / 2.0);
}

WaveletBasisSpec experiment_basis_2d(const FractionalForm2D& form) {
  return make_basis_spec(form.r, 0.5 * (form.s + 1.0 - form.alpha));
}

SolveResult solve_problem(const ProblemSpec& problem, int n, SolverKind solver,
                          SolverConfig config) {
  SolveResult result;
  bool needs_transform =
      solver == SolverKind::pre_bicgstab || solver == SolverKind::pre_gmres;

  if (problem.dimension == 1) {
    FractionalForm1D form = problem.form1d;
    form.n = n;
    WaveletBasisSpec spec = experiment_basis_1d(form);
    Vector rhs = load_vector_1d(problem.forcing, spec, n);
    result.size = rhs.size();

    TransformMatrix s_n;
    if (needs_transform) {
      s_n = multilevel_1d(spec, n);
      config.preconditioner = &s_n;
    }

    if (solver == SolverKind::lu) {
      auto t0 = std::chrono::steady_clock::now();
      DenseMatrix a = assemble_A(form).dense();
      result.coeffs = lu_solve_doolittle(a, rhs);
      result.report.converged = true;
      result.report.solution = result.coeffs;
      result.report.wall_time =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    } else {
      FastToeplitz a = assemble_A_fast(form);
      LinearOperator op = [&a](const Vector& x) { return a.apply(x); };
      SolverReport rep = (solver == SolverKind::bicgstab || solver == SolverKind::pre_bicgstab)
                             ? bicgstab(op, rhs, config)
                             : gmres(op, rhs, config);
      result.coeffs = rep.solution;
      result.report = std::move(rep);
    }
    if (!problem.exact.empty()) result.l2 = l2_error(result.coeffs, problem.exact, spec, n);
    return result;
  }

  FractionalForm2D form = problem.form2d;
  form.n = n;
  WaveletBasisSpec spec = experiment_basis_2d(form);
  Vector rhs = load_vector_2d(problem.forcing2d, spec, n);
  result.size = rhs.size();

  TransformMatrix s_n;
  if (needs_transform) {
    s_n = multilevel_2d(spec, n);
    config.preconditioner = &s_n;
  }

  KroneckerSumOperator c = assemble_C2d(form);
  if (solver == SolverKind::lu) {
    if (rhs.size() > 4200)
      throw std::invalid_argument("solve_problem: lu limited to desk-scale 2D systems");
    auto t0 = std::chrono::steady_clock::now();
    DenseMatrix a = c.dense();
    result.coeffs = lu_solve_doolittle(a, rhs);
    result.report.converged = true;
    result.report.solution = result.coeffs;
    result.report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  } else {
    LinearOperator op = [&c](const Vector& x) { return c.apply(x); };
    SolverReport rep = (solver == SolverKind::bicgstab || solver == SolverKind::pre_bicgstab)
                           ? bicgstab(op, rhs, config)
                           : gmres(op, rhs, config);
    result.coeffs = rep.solution;
    result.report = std::move(rep);
  }
  if (!problem.exact2d.empty()) result.l2 = l2_error(result.coeffs, problem.exact2d, spec, n);
  return result;
}

}  // namespace fede
