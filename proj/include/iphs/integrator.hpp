#ifndef IPHS_INTEGRATOR_HPP
#define IPHS_INTEGRATOR_HPP

#include <functional>
#include <string>
#include <vector>

#include "iphs/discrete_gradient.hpp"
#include "iphs/nonlinear_solver.hpp"
#include "iphs/system.hpp"
#include "iphs/types.hpp"

namespace iphs {

struct StepResult {
  Vector x_next;
  Vector y;
  SolveOutcome solver;
  /// H(x') - H(x) - h y^T u, from direct H evaluations.
  double energy_residual = 0.0;
  /// S(x') - S(x) - h y^T tau_total, from direct S evaluations.
  double entropy_production = 0.0;
  /// h * [sum_i gamma_i {S,H}d^2 + sum_j gamma_port_j {Stot,Htot}d^2],
  /// the bracket side of the entropy balance.
  double production_sum = 0.0;
};

/// Zero-order hold control: u_of(step index, step start time).
struct ControlSchedule {
  std::function<Vector(int, double)> u_of;

  static ControlSchedule constant(Vector u);
};

struct Trajectory {
  struct StepDiagnostics {
    double energy_residual = 0.0;
    double entropy_production = 0.0;
    double production_sum = 0.0;
    double power = 0.0;         // y^T u
    double entropy_flow = 0.0;  // y^T tau_total
    int solver_iterations = 0;
    double solver_residual = 0.0;
  };

  std::vector<double> times;   // length steps()+1, uniformly spaced
  std::vector<Vector> states;  // length steps()+1
  std::vector<Vector> inputs;  // one per completed step
  std::vector<Vector> outputs;
  std::vector<StepDiagnostics> diagnostics;
  std::vector<double> energy;   // H(x_k)
  std::vector<double> entropy;  // S(x_k)

  std::vector<std::string> state_names;
  std::vector<std::string> observable_names;
  std::vector<std::vector<double>> observable_values;  // parallel to names

  int input_dim = 0;
  double step_size = 0.0;
  double solver_tolerance = 0.0;
  bool completed = false;
  std::string error;  // nonempty when the run aborted

  int steps() const { return static_cast<int>(states.size()) - 1; }
};

/// Conservative skew-gradient step: solves x' = x + h J g(x,x') for the chosen
/// discrete gradient g of H. For constant J the energy is preserved up to the
/// solver residual; energy_residual reports H(x') - H(x).
StepResult step_skew_gradient(const SkewMatrix &J, const ScalarField &H,
                              const DiscreteGradientMethod &method,
                              const Vector &x, double h, const SolverConfig &solver);

/// One step of the discrete-gradient IPHS scheme: discrete gradients of H and
/// S at (x_k, x_{k+1}), gamma coefficients at the midpoint (x_k + x_{k+1})/2,
/// zero-order-hold input u. Fills the output y and the balance diagnostics.
StepResult step_iphs(const IphsSystem &sys, const DiscreteGradientMethod &method,
                     const Vector &x, const Vector &u, double h,
                     const SolverConfig &solver);

/// Applies step_iphs repeatedly with u_k = schedule(k, k h). On solver failure
/// the partial trajectory is returned with completed = false and a message.
Trajectory integrate_trajectory(const IphsSystem &sys,
                                const DiscreteGradientMethod &method,
                                const Vector &x0, const ControlSchedule &schedule,
                                double h, int steps, const SolverConfig &solver);

/// Classical 4-stage Runge-Kutta on continuous_rhs with u frozen. Accuracy
/// oracle only; not structure-preserving.
Vector rk4_reference_step(const IphsSystem &sys, const Vector &x, const Vector &u,
                          double h);

/// Recomputes the bracket side of the discrete entropy balance from the
/// endpoint states; pairs with StepResult::entropy_production in tests.
double discrete_production_sum(const IphsSystem &sys,
                               const DiscreteGradientMethod &method,
                               const Vector &x, const Vector &x_next,
                               const Vector &u, double h);

struct BalanceReport {
  bool valid = false;       // false for trajectories without steps
  std::string message;
  bool solver_ok = false;   // the run completed all requested steps
  int steps = 0;

  double max_abs_energy_residual = 0.0;
  double min_entropy_production = 0.0;
  double cumulative_energy_residual = 0.0;    // H_N - H_0 - h sum y^T u
  double cumulative_entropy_production = 0.0; // S_N - S_0 - h sum y^T tau
  double total_production_sum = 0.0;

  double energy_threshold = 0.0;   // 100 tol (1 + max|H|)
  double entropy_threshold = 0.0;  // 100 tol (1 + max|S|)
  bool energy_ok = false;
  bool entropy_ok = false;

  bool all_ok() const { return valid && solver_ok && energy_ok && entropy_ok; }
};

/// Per-run balance summary with pass/fail against thresholds derived from the
/// trajectory's solver tolerance.
BalanceReport balance_diagnostics(const Trajectory &traj);

}  // namespace iphs

#endif
