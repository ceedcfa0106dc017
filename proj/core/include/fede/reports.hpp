#pragma once

#include <string>
#include <vector>

#include "fede/problems.hpp"

namespace fede {

/// Column-labelled table with preformatted cells; serializes to CSV and to
/// an aligned text block. Emission is deterministic except for cpu-seconds
/// columns, which are measurements.
struct ReportDocument {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
  std::string to_text() const;
  static ReportDocument from_csv(const std::string& csv);
};

std::string format_sig(double v, int significant = 6);

struct Cond1DConfig {
  double beta = 0.5;
  double p = 0.5;
  double q = 0.5;
  double a = 1.0;
  int r = 2;
  int nmin = 3;
  int nmax = 10;
};
/// kappa(A_n) and kappa(B_n) over the level range (Tables 1, 2, 5, 6 layout).
ReportDocument run_condition_table(const Cond1DConfig& config);

struct Cond2DConfig {
  int s = 2;
  double alpha = 0.75;
  double beta = 0.75;
  double a1 = 1.0;
  double a2 = 1.0;
  double p1 = 1.0;
  double q1 = 0.0;
  double p2 = 1.0;
  double q2 = 0.0;
  int r = 3;
  int nmin = 4;
  int nmax = 6;
};
/// kappa(C_n^s), kappa(D_n^s) and their log2 growth ratios (Tables 7, 8 layout).
ReportDocument run_condition_table(const Cond2DConfig& config);

struct ConvergenceConfig {
  int nmin = 5;
  int nmax = 10;
  SolverKind solver = SolverKind::lu;
  double tolerance = 1e-7;
  std::size_t restart = 0;
};
/// L2 errors and observed orders over the level range.
ReportDocument run_convergence_table(const ProblemSpec& problem, const ConvergenceConfig& config);

struct BenchmarkConfig {
  int nmin = 5;
  int nmax = 10;
  std::vector<SolverKind> solvers{SolverKind::bicgstab, SolverKind::lu, SolverKind::pre_bicgstab};
  double tolerance = 1e-7;
  std::size_t restart = 0;
};
/// Solver comparison rows: n,size,solver,iterations,cpu_seconds,l2_error,converged.
ReportDocument run_benchmark(const ProblemSpec& problem, const BenchmarkConfig& config);

/// Two-column gnuplot-ready data block (h vs error) from a convergence table.
std::string gnuplot_data(const ReportDocument& convergence);

}  // namespace fede
