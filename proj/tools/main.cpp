// Command-line driver for the wavelet-Galerkin fractional elliptic solvers:
// condition-number tables, single solves, convergence tables and solver
// benchmarks, emitted as aligned text or CSV.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "fede/reports.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

struct OutputOptions {
  std::string out_file;
  std::string format;  // "", "csv", "text"
  std::string gnuplot_file;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--out", opts.out_file, "write the table to this file");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"csv", "text"}));
}

int emit(const fede::ReportDocument& doc, const OutputOptions& opts) {
  std::string body;
  bool csv = opts.format == "csv" || (opts.format.empty() && !opts.out_file.empty());
  body = csv ? doc.to_csv() : doc.to_text();
  if (!opts.out_file.empty()) {
    std::ofstream f(opts.out_file);
    if (!f) {
      std::cerr << "cannot open " << opts.out_file << " for writing\n";
      return kExitUsage;
    }
    f << body;
    std::cout << doc.to_text();
  } else {
    std::cout << body;
  }
  if (!opts.gnuplot_file.empty()) {
    std::ofstream f(opts.gnuplot_file);
    if (!f) {
      std::cerr << "cannot open " << opts.gnuplot_file << " for writing\n";
      return kExitUsage;
    }
    f << fede::gnuplot_data(doc);
  }
  return kExitOk;
}

struct ProblemFlags {
  std::string problem = "f1";
  double beta = 0.5;
  double alpha = 0.75;
  double lambda = 1.1;
  int s = 2;
  double p = 1.0, q = 0.0, a = 1.0;
};

fede::ProblemSpec build_problem(const ProblemFlags& flags, int dimension) {
  if (dimension == 1) {
    if (flags.problem != "f1" && flags.problem != "f2")
      throw CLI::ValidationError("--problem", "1D problems are f1 and f2");
    if (flags.p != 1.0 || flags.q != 0.0)
      throw CLI::ValidationError("--p", "the f1/f2 forcing terms are derived for p=1, q=0");
    fede::ProblemSpec prob = flags.problem == "f1" ? fede::make_f1(flags.beta)
                                                   : fede::make_f2(flags.beta, flags.lambda);
    prob.form1d.a = flags.a;
    return prob;
  }
  if (flags.problem != "fs")
    throw CLI::ValidationError("--problem", "the 2D problem family is fs");
  if (flags.p != 1.0 || flags.q != 0.0)
    throw CLI::ValidationError("--p", "the fs forcing terms are derived for p1=p2=1");
  fede::ProblemSpec prob = fede::make_fs(flags.s);
  return prob;
}

std::vector<fede::SolverKind> parse_solvers(const std::vector<std::string>& names) {
  std::vector<fede::SolverKind> out;
  for (const auto& name : names) out.push_back(fede::solver_from_name(name));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wavelet-Galerkin solvers for fractional elliptic differential equations"};
  app.require_subcommand(1);

  // ---- cond1d ----------------------------------------------------------
  fede::Cond1DConfig c1;
  OutputOptions c1out;
  CLI::App* cond1d = app.add_subcommand("cond1d", "kappa(A_n)/kappa(B_n) over a level range");
  cond1d->add_option("--beta", c1.beta, "fractional exponent in [0,1)");
  cond1d->add_option("--p", c1.p, "left-sided weight");
  cond1d->add_option("--q", c1.q, "right-sided weight");
  cond1d->add_option("--a", c1.a, "diffusion coefficient");
  cond1d->add_option("--r", c1.r, "spline order")->check(CLI::IsMember({2, 3}));
  cond1d->add_option("--nmin", c1.nmin);
  cond1d->add_option("--nmax", c1.nmax);
  add_output_flags(cond1d, c1out);

  // ---- cond2d ----------------------------------------------------------
  fede::Cond2DConfig c2;
  OutputOptions c2out;
  CLI::App* cond2d = app.add_subcommand("cond2d", "kappa(C_n^s)/kappa(D_n^s) over a level range");
  cond2d->add_option("--s", c2.s, "operator order flag")->check(CLI::IsMember({2, 3}));
  cond2d->add_option("--alpha", c2.alpha, "x-direction exponent");
  cond2d->add_option("--beta", c2.beta, "y-direction exponent");
  cond2d->add_option("--p1", c2.p1);
  cond2d->add_option("--q1", c2.q1);
  cond2d->add_option("--p2", c2.p2);
  cond2d->add_option("--q2", c2.q2);
  cond2d->add_option("--a1", c2.a1);
  cond2d->add_option("--a2", c2.a2);
  cond2d->add_option("--r", c2.r)->check(CLI::IsMember({3}));
  cond2d->add_option("--nmin", c2.nmin);
  cond2d->add_option("--nmax", c2.nmax);
  add_output_flags(cond2d, c2out);

  // ---- solve / bench ----------------------------------------------------
  ProblemFlags pf1d, pf2d;
  OutputOptions s1out, s2out, b1out, b2out;
  std::string solver1d = "pre-bicgstab", solver2d = "pre-bicgstab";
  std::vector<std::string> bench1d_solvers{"bicgstab", "lu", "pre-bicgstab"};
  std::vector<std::string> bench2d_solvers{"bicgstab", "pre-bicgstab"};
  double tol = 1e-7;
  std::size_t restart = 0;
  int n_single = -1;
  int nmin = 5, nmax = 10, nmin2 = 4, nmax2 = 6;

  auto add_problem_flags_1d = [&](CLI::App* cmd) {
    cmd->add_option("--problem", pf1d.problem)->check(CLI::IsMember({"f1", "f2"}));
    cmd->add_option("--beta", pf1d.beta);
    cmd->add_option("--lambda", pf1d.lambda, "exponent of the f2 solution family");
    cmd->add_option("--p", pf1d.p);
    cmd->add_option("--q", pf1d.q);
    cmd->add_option("--a", pf1d.a);
    cmd->add_option("--tol", tol, "residual stopping threshold");
    cmd->add_option("--restart", restart, "GMRES restart period (0 = full)");
  };
  auto add_problem_flags_2d = [&](CLI::App* cmd) {
    cmd->add_option("--problem", pf2d.problem)->check(CLI::IsMember({"fs"}));
    cmd->add_option("--s", pf2d.s)->check(CLI::IsMember({2, 3}));
    cmd->add_option("--tol", tol);
    cmd->add_option("--restart", restart);
  };

  CLI::App* solve1d = app.add_subcommand("solve1d", "solve a 1D problem at one level or a range");
  add_problem_flags_1d(solve1d);
  solve1d->add_option("--solver", solver1d);
  solve1d->add_option("--n", n_single, "single level");
  solve1d->add_option("--nmin", nmin);
  solve1d->add_option("--nmax", nmax);
  solve1d->add_option("--gnuplot", s1out.gnuplot_file, "write h/error pairs for plotting");
  add_output_flags(solve1d, s1out);

  CLI::App* solve2d = app.add_subcommand("solve2d", "solve the 2D problem at one level or a range");
  add_problem_flags_2d(solve2d);
  solve2d->add_option("--solver", solver2d);
  solve2d->add_option("--n", n_single);
  solve2d->add_option("--nmin", nmin2);
  solve2d->add_option("--nmax", nmax2);
  solve2d->add_option("--gnuplot", s2out.gnuplot_file);
  add_output_flags(solve2d, s2out);

  CLI::App* bench1d = app.add_subcommand("bench1d", "solver comparison over a level range (1D)");
  add_problem_flags_1d(bench1d);
  bench1d->add_option("--solver", bench1d_solvers, "solvers to run (repeatable)");
  bench1d->add_option("--nmin", nmin);
  bench1d->add_option("--nmax", nmax);
  add_output_flags(bench1d, b1out);

  CLI::App* bench2d = app.add_subcommand("bench2d", "solver comparison over a level range (2D)");
  add_problem_flags_2d(bench2d);
  bench2d->add_option("--solver", bench2d_solvers);
  bench2d->add_option("--nmin", nmin2);
  bench2d->add_option("--nmax", nmax2);
  add_output_flags(bench2d, b2out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cond1d->parsed()) return emit(fede::run_condition_table(c1), c1out);
    if (cond2d->parsed()) return emit(fede::run_condition_table(c2), c2out);

    if (solve1d->parsed() || solve2d->parsed()) {
      bool is1d = solve1d->parsed();
      fede::ProblemSpec prob = build_problem(is1d ? pf1d : pf2d, is1d ? 1 : 2);
      fede::SolverKind kind = fede::solver_from_name(is1d ? solver1d : solver2d);
      const OutputOptions& opts = is1d ? s1out : s2out;
      if (n_single >= 0) {
        fede::SolverConfig sc;
        sc.tolerance = tol;
        sc.restart = restart;
        fede::SolveResult res = fede::solve_problem(prob, n_single, kind, sc);
        fede::ReportDocument doc;
        doc.title = "solve, problem " + prob.name;
        doc.columns = {"n", "size", "solver", "iterations", "cpu_seconds", "l2_error", "converged"};
        doc.rows.push_back({std::to_string(n_single), std::to_string(res.size),
                            fede::solver_name(kind), res.report.iteration_label(),
                            fede::format_sig(res.report.wall_time, 5),
                            res.l2 ? fede::format_sig(*res.l2, 5) : "",
                            res.report.converged ? "1" : "0"});
        int rc = emit(doc, opts);
        if (rc != kExitOk) return rc;
        return res.report.converged ? kExitOk : kExitNoConvergence;
      }
      fede::ConvergenceConfig cc;
      cc.nmin = is1d ? nmin : nmin2;
      cc.nmax = is1d ? nmax : nmax2;
      cc.solver = kind;
      cc.tolerance = tol;
      cc.restart = restart;
      return emit(fede::run_convergence_table(prob, cc), opts);
    }

    if (bench1d->parsed() || bench2d->parsed()) {
      bool is1d = bench1d->parsed();
      fede::ProblemSpec prob = build_problem(is1d ? pf1d : pf2d, is1d ? 1 : 2);
      fede::BenchmarkConfig bc;
      bc.nmin = is1d ? nmin : nmin2;
      bc.nmax = is1d ? nmax : nmax2;
      bc.solvers = parse_solvers(is1d ? bench1d_solvers : bench2d_solvers);
      bc.tolerance = tol;
      bc.restart = restart;
      fede::ReportDocument doc = fede::run_benchmark(prob, bc);
      int rc = emit(doc, is1d ? b1out : b2out);
      if (rc != kExitOk) return rc;
      for (const auto& row : doc.rows)
        if (row.back() == "0") return kExitNoConvergence;
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  }
  return kExitOk;
}
