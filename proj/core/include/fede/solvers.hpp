#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fede/linalg.hpp"
#include "fede/transform.hpp"

namespace fede {

using LinearOperator = std::function<Vector(const Vector&)>;

struct SolverConfig {
  double tolerance = 1e-7;          // residual 2-norm stopping threshold
  std::size_t max_iterations = 200000;
  std::size_t restart = 0;          // GMRES restart period, 0 = full
  const TransformMatrix* preconditioner = nullptr;  // wavelet transform, optional
};

struct SolverBreakdown : std::runtime_error {
  SolverBreakdown(const std::string& what, double iteration)
      : std::runtime_error(what + " at iteration " + std::to_string(iteration)),
        iteration(iteration) {}
  double iteration;
};

struct SolverReport {
  double iterations = 0.0;  // Bi-CGSTAB counts the early s-exit as a half step
  std::vector<double> residual_history;
  bool converged = false;
  bool stagnated = false;
  double wall_time = 0.0;
  Vector solution;
  std::size_t restart = 0;

  /// "33.5" style for Bi-CGSTAB / full GMRES, "6x50+47" for restarted GMRES.
  std::string iteration_label() const;
};

/// Bi-CGSTAB on A y = b. With a wavelet preconditioner S the search
/// directions are transformed as p^ = S^T S p (and likewise for s), which is
/// the preconditioned iteration of the wavelet-Galerkin scheme; the stopping
/// test stays on the unpreconditioned residual.
SolverReport bicgstab(const LinearOperator& apply_a, const Vector& b, const SolverConfig& config);

/// GMRES with modified Gram-Schmidt Arnoldi and Givens least squares,
/// restarted every config.restart steps when nonzero. With a wavelet
/// preconditioner the iteration runs on S A S^T z = S b and the returned
/// solution is y = S^T z; the stopping test is on the iterated system.
SolverReport gmres(const LinearOperator& apply_a, const Vector& b, const SolverConfig& config);

}  // namespace fede
