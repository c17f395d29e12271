#ifndef IPHS_SCALAR_FIELD_HPP
#define IPHS_SCALAR_FIELD_HPP

#include <functional>
#include <vector>

#include "iphs/types.hpp"

namespace iphs {

/// A differentiable real-valued function of the state with a user-supplied
/// closed-form gradient. Immutable after construction; safe to evaluate
/// concurrently.
class ScalarField {
 public:
  using ValueFn = std::function<double(const Vector &)>;
  using GradientFn = std::function<Vector(const Vector &)>;

  ScalarField(int dimension, ValueFn value, GradientFn gradient);

  int dimension() const { return dim_; }

  double value(const Vector &x) const;

  /// Exact gradient, same dimension as the state.
  Vector gradient(const Vector &x) const;

 private:
  void check_dimension(const Vector &x) const;

  int dim_;
  ValueFn value_;
  GradientFn gradient_;
};

/// Central-difference gradient, component i = [f(x+step*e_i) - f(x-step*e_i)] / (2 step).
/// Validation oracle only; never used inside a stepper.
Vector numeric_gradient(const std::function<double(const Vector &)> &f,
                        const Vector &x, double step);

/// Worst relative deviation between the closed-form gradient and central
/// differences over the given sample states: max_i |g_i - num_i| / (1 + |g|_inf).
double max_gradient_deviation(const ScalarField &f,
                              const std::vector<Vector> &samples,
                              double step = 1e-5);

}  // namespace iphs

#endif
