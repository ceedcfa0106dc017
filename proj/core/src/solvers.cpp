#include "fede/solvers.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

namespace fede {

namespace {

constexpr double kBreakdownEps = 1e-300;

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

std::string SolverReport::iteration_label() const {
  char buf[64];
  if (restart > 0) {
    auto total = static_cast<std::size_t>(iterations);
    std::size_t cycles = total / restart;
    std::size_t rem = total % restart;
    std::snprintf(buf, sizeof buf, "%zux%zu+%zu", cycles, restart, rem);
  } else {
    std::snprintf(buf, sizeof buf, "%.1f", iterations);
  }
  return buf;
}

SolverReport bicgstab(const LinearOperator& apply_a, const Vector& b, const SolverConfig& config) {
  Stopwatch clock;
  const double eps = config.tolerance;
  const TransformMatrix* s_n = config.preconditioner;
  auto precondition = [&](const Vector& v) {
    if (!s_n) return v;
    return s_n->apply_transpose(s_n->apply(v));
  };

  SolverReport rep;
  std::size_t dim = b.size();
  Vector y(dim, 0.0);          // zero initial iterate
  Vector r = b;                // r^0 = b - A*0
  Vector rhat = r;
  Vector p, v, s, t;
  double rho_prev = 0.0, alpha = 0.0, omega = 0.0;

  rep.residual_history.push_back(norm2(r));
  if (rep.residual_history.back() <= eps) {
    rep.converged = true;
    rep.solution = std::move(y);
    rep.wall_time = clock.seconds();
    return rep;
  }

  for (std::size_t k = 1; k <= config.max_iterations; ++k) {
    double rho = dot(rhat, r);
    if (std::abs(rho) < kBreakdownEps)
      throw SolverBreakdown("bicgstab: rho breakdown", static_cast<double>(k));
    if (k == 1) {
      p = r;
    } else {
      double beta = (rho / rho_prev) * (alpha / omega);
      for (std::size_t i = 0; i < dim; ++i) p[i] = r[i] + beta * (p[i] - omega * v[i]);
    }
    Vector phat = precondition(p);
    v = apply_a(phat);
    double rv = dot(rhat, v);
    if (std::abs(rv) < kBreakdownEps)
      throw SolverBreakdown("bicgstab: alpha breakdown", static_cast<double>(k));
    alpha = rho / rv;
    s = r;
    axpy(-alpha, v, s);
    double snorm = norm2(s);
    if (snorm <= eps) {
      axpy(alpha, phat, y);
      rep.iterations = static_cast<double>(k) - 0.5;
      rep.residual_history.push_back(snorm);
      rep.converged = true;
      break;
    }
    Vector shat = precondition(s);
    t = apply_a(shat);
    double tt = dot(t, t);
    if (tt < kBreakdownEps)
      throw SolverBreakdown("bicgstab: omega breakdown", static_cast<double>(k));
    omega = dot(t, s) / tt;
    if (std::abs(omega) < kBreakdownEps)
      throw SolverBreakdown("bicgstab: omega breakdown", static_cast<double>(k));
    axpy(alpha, phat, y);
    axpy(omega, shat, y);
    r = s;
    axpy(-omega, t, r);
    double rnorm = norm2(r);
    rep.residual_history.push_back(rnorm);
    rep.iterations = static_cast<double>(k);
    if (rnorm <= eps) {
      rep.converged = true;
      break;
    }
    rho_prev = rho;
  }

  rep.solution = std::move(y);
  rep.wall_time = clock.seconds();
  return rep;
}

SolverReport gmres(const LinearOperator& apply_a, const Vector& b, const SolverConfig& config) {
  Stopwatch clock;
  const double eps = config.tolerance;
  const TransformMatrix* s_n = config.preconditioner;

  // Preconditioned runs iterate on S A S^T z = S b and map back at the end.
  LinearOperator op = apply_a;
  Vector rhs = b;
  if (s_n) {
    op = [&apply_a, s_n](const Vector& x) {
      return s_n->apply(apply_a(s_n->apply_transpose(x)));
    };
    rhs = s_n->apply(b);
  }

  SolverReport rep;
  rep.restart = config.restart;
  std::size_t dim = rhs.size();
  std::size_t m = (config.restart > 0) ? config.restart : std::min(config.max_iterations, dim);

  Vector z(dim, 0.0);
  std::size_t total = 0;
  bool done = false;

  std::vector<Vector> basis;
  std::vector<double> hess;  // column-packed, (m+1) rows
  Vector cs(m), sn(m), g(m + 1);

  while (!done) {
    Vector az = op(z);
    Vector r(dim);
    for (std::size_t i = 0; i < dim; ++i) r[i] = rhs[i] - az[i];
    double beta = norm2(r);
    if (rep.residual_history.empty()) rep.residual_history.push_back(beta);
    if (beta <= eps) {
      rep.converged = true;
      break;
    }
    double cycle_start_residual = beta;

    basis.assign(1, r);
    for (double& x : basis[0]) x /= beta;
    hess.assign((m + 1) * m, 0.0);
    std::fill(g.begin(), g.end(), 0.0);
    g[0] = beta;

    std::size_t steps = 0;
    double resid = beta;
    for (std::size_t j = 0; j < m; ++j) {
      Vector w = op(basis[j]);
      for (std::size_t i = 0; i <= j; ++i) {
        double hij = dot(w, basis[i]);
        hess[i * m + j] = hij;
        axpy(-hij, basis[i], w);
      }
      double hjj = norm2(w);
      hess[(j + 1) * m + j] = hjj;
      bool lucky = hjj < 1e-14 * cycle_start_residual;
      if (!lucky) {
        for (double& x : w) x /= hjj;
        basis.push_back(std::move(w));
      }
      // apply the accumulated Givens rotations to the new column
      for (std::size_t i = 0; i < j; ++i) {
        double h0 = hess[i * m + j], h1 = hess[(i + 1) * m + j];
        hess[i * m + j] = cs[i] * h0 + sn[i] * h1;
        hess[(i + 1) * m + j] = -sn[i] * h0 + cs[i] * h1;
      }
      double h0 = hess[j * m + j], h1 = hess[(j + 1) * m + j];
      double denom = std::hypot(h0, h1);
      cs[j] = (denom == 0.0) ? 1.0 : h0 / denom;
      sn[j] = (denom == 0.0) ? 0.0 : h1 / denom;
      hess[j * m + j] = denom;
      hess[(j + 1) * m + j] = 0.0;
      double g0 = g[j];
      g[j] = cs[j] * g0;
      g[j + 1] = -sn[j] * g0;
      resid = std::abs(g[j + 1]);
      ++total;
      rep.residual_history.push_back(resid);
      steps = j + 1;
      if (resid <= eps || lucky) {
        rep.converged = true;
        done = true;
        break;
      }
      if (total >= config.max_iterations) {
        done = true;
        break;
      }
    }

    // back substitution on the triangular system, then update the iterate
    Vector coef(steps, 0.0);
    for (std::size_t i = steps; i-- > 0;) {
      double sum = g[i];
      for (std::size_t l = i + 1; l < steps; ++l) sum -= hess[i * m + l] * coef[l];
      coef[i] = sum / hess[i * m + i];
    }
    for (std::size_t i = 0; i < steps; ++i) axpy(coef[i], basis[i], z);

    if (!done && resid >= cycle_start_residual * (1.0 - 1e-12)) {
      rep.stagnated = true;
      done = true;
    }
  }

  rep.iterations = static_cast<double>(total);
  rep.solution = s_n ? s_n->apply_transpose(z) : std::move(z);
  rep.wall_time = clock.seconds();
  return rep;
}

}  // namespace fede
