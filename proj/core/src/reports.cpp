#include "fede/reports.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "fede/transform.hpp"

namespace fede {

std::string format_sig(double v, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, v);
  return buf;
}

std::string ReportDocument::to_csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out << ',';
    out << columns[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

std::string ReportDocument::to_text() const {
  std::vector<std::size_t> width(columns.size(), 0);
  for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], row[i].size());

  std::ostringstream out;
  if (!title.empty()) out << "# " << title << '\n';
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << "  ";
      out << cells[i];
      for (std::size_t pad = cells[i].size(); pad < width[i]; ++pad) out << ' ';
    }
    out << '\n';
  };
  emit(columns);
  for (const auto& row : rows) emit(row);
  return out.str();
}

ReportDocument ReportDocument::from_csv(const std::string& csv) {
  ReportDocument doc;
  std::istringstream in(csv);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      std::size_t pos = line.find(',', start);
      if (pos == std::string::npos) {
        cells.push_back(line.substr(start));
        break;
      }
      cells.push_back(line.substr(start, pos - start));
      start = pos + 1;
    }
    if (header) {
      doc.columns = std::move(cells);
      header = false;
    } else {
      doc.rows.push_back(std::move(cells));
    }
  }
  return doc;
}

ReportDocument run_condition_table(const Cond1DConfig& config) {
  FractionalForm1D form{config.a, config.p, config.q, config.beta, config.r, config.nmin};
  validate(form);
  if (config.nmin < 3 || config.nmax > 14 || config.nmin > config.nmax)
    throw std::invalid_argument("run_condition_table: level range out of desk scale");

  ReportDocument doc;
  doc.title = "condition numbers, 1D, beta=" + format_sig(config.beta, 4) +
              " p=" + format_sig(config.p, 4) + " q=" + format_sig(config.q, 4) +
              " r=" + std::to_string(config.r);
  doc.columns = {"n", "size", "kappa_A", "kappa_B"};
  WaveletBasisSpec spec = experiment_basis_1d(form);
  for (int n = config.nmin; n <= config.nmax; ++n) {
    form.n = n;
    DenseMatrix a = assemble_A(form).dense();
    double ka = condition_number_2(a);
    TransformMatrix s = multilevel_1d(spec, n);
    DenseMatrix b = transform_congruence(s, a);
    double kb = condition_number_2(b);
    doc.rows.push_back({std::to_string(n), std::to_string(a.rows()), format_sig(ka),
                        format_sig(kb)});
  }
  return doc;
}

ReportDocument run_condition_table(const Cond2DConfig& config) {
  FractionalForm2D form{config.s,  config.a1, config.a2, config.p1,   config.q1, config.p2,
                        config.q2, config.alpha, config.beta, config.r, config.nmin};
  validate(form);
  if (config.nmin < 3 || config.nmax > 6 || config.nmin > config.nmax)
    throw std::invalid_argument("run_condition_table: 2D level range out of desk scale");

  ReportDocument doc;
  doc.title = "condition numbers, 2D, s=" + std::to_string(config.s) +
              " alpha=" + format_sig(config.alpha, 4) + " beta=" + format_sig(config.beta, 4) +
              " r=" + std::to_string(config.r);
  doc.columns = {"n", "size", "kappa_C", "ratio_C", "kappa_D", "ratio_D"};
  WaveletBasisSpec spec = experiment_basis_2d(form);
  double prev_c = 0.0, prev_d = 0.0;
  for (int n = config.nmin; n <= config.nmax; ++n) {
    form.n = n;
    KroneckerSumOperator c = assemble_C2d(form);
    DenseMatrix cd = c.dense();
    double kc = condition_number_2(cd);
    TransformMatrix s = multilevel_2d(spec, n);
    DenseMatrix dd = transform_congruence(s, cd);
    double kd = condition_number_2(dd);
    std::string rc = prev_c > 0.0 ? format_sig(std::log2(kc / prev_c), 5) : "";
    std::string rd = prev_d > 0.0 ? format_sig(std::log2(kd / prev_d), 5) : "";
    doc.rows.push_back({std::to_string(n), std::to_string(cd.rows()), format_sig(kc), rc,
                        format_sig(kd), rd});
    prev_c = kc;
    prev_d = kd;
  }
  return doc;
}

ReportDocument run_convergence_table(const ProblemSpec& problem, const ConvergenceConfig& config) {
  ReportDocument doc;
  doc.title = "convergence, problem " + problem.name + ", solver " + solver_name(config.solver);
  doc.columns = {"n", "size", "l2_error", "order"};
  double prev = 0.0;
  for (int n = config.nmin; n <= config.nmax; ++n) {
    SolverConfig sc;
    sc.tolerance = config.tolerance;
    sc.restart = config.restart;
    SolveResult res = solve_problem(problem, n, config.solver, sc);
    if (!res.l2) throw std::invalid_argument("run_convergence_table: problem has no exact solution");
    double err = *res.l2;
    std::string order = prev > 0.0 ? format_sig(std::log2(prev / err), 4) : "";
    doc.rows.push_back({std::to_string(n), std::to_string(res.size), format_sig(err, 5), order});
    prev = err;
  }
  return doc;
}

ReportDocument run_benchmark(const ProblemSpec& problem, const BenchmarkConfig& config) {
  ReportDocument doc;
  doc.title = "benchmark, problem " + problem.name;
  doc.columns = {"n", "size", "solver", "iterations", "cpu_seconds", "l2_error", "converged"};
  for (int n = config.nmin; n <= config.nmax; ++n) {
    for (SolverKind solver : config.solvers) {
      SolverConfig sc;
      sc.tolerance = config.tolerance;
      sc.restart = config.restart;
      SolveResult res = solve_problem(problem, n, solver, sc);
      doc.rows.push_back({std::to_string(n), std::to_string(res.size), solver_name(solver),
                          res.report.iteration_label(), format_sig(res.report.wall_time, 5),
                          res.l2 ? format_sig(*res.l2, 5) : "",
                          res.report.converged ? "1" : "0"});
    }
  }
  return doc;
}

std::string gnuplot_data(const ReportDocument& convergence) {
  std::size_t ncol = 0, ecol = 0;
  bool has_n = false, has_e = false;
  for (std::size_t i = 0; i < convergence.columns.size(); ++i) {
    if (convergence.columns[i] == "n") {
      ncol = i;
      has_n = true;
    }
    if (convergence.columns[i] == "l2_error") {
      ecol = i;
      has_e = true;
    }
  }
  if (!has_n || !has_e) throw std::invalid_argument("gnuplot_data: table lacks n/l2_error columns");
  std::ostringstream out;
  out << "# h  l2_error\n";
  for (const auto& row : convergence.rows) {
    int n = std::stoi(row[ncol]);
    out << format_sig(std::pow(2.0, -n), 8) << ' ' << row[ecol] << '\n';
  }
  return out.str();
}

}  // namespace fede
