#ifndef IPHS_NONLINEAR_SOLVER_HPP
#define IPHS_NONLINEAR_SOLVER_HPP

#include <functional>
#include <string>

#include "iphs/types.hpp"

namespace iphs {

enum class SolverMethod {
  newton_fd,    // damped Newton, forward-difference Jacobian
  fixed_point,  // plain fixed-point iteration
};

std::string to_string(SolverMethod method);
SolverMethod parse_solver_method(const std::string &name);

struct SolverConfig {
  SolverMethod method = SolverMethod::newton_fd;
  double tolerance = 1e-12;  // residual norm, absolute + relative mix
  int max_iterations = 50;
  double fd_step = 1e-7;     // Jacobian finite-difference increment
};

struct SolveOutcome {
  Vector root;
  double residual_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

using VectorFn = std::function<Vector(const Vector &)>;

/// Damped Newton iteration on residual(z) = 0 with a forward finite-difference
/// Jacobian (increment fd_step * (1 + |z_i|) per column) and a halving line
/// search on the residual norm (at most 20 halvings). Non-finite residual
/// evaluations and near-singular Jacobians (pivot below 1e-14 * scale) yield
/// a failure outcome instead of throwing.
SolveOutcome solve_newton_fd(const VectorFn &residual, const Vector &guess,
                             const SolverConfig &cfg);

/// Iterates z <- map(z) until |map(z) - z| <= tolerance * (1 + |z|) or
/// max_iterations is reached.
SolveOutcome solve_fixed_point(const VectorFn &map, const Vector &guess,
                               const SolverConfig &cfg);

}  // namespace iphs

#endif
