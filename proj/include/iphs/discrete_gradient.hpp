#ifndef IPHS_DISCRETE_GRADIENT_HPP
#define IPHS_DISCRETE_GRADIENT_HPP

#include <string>
#include <vector>

#include "iphs/scalar_field.hpp"
#include "iphs/types.hpp"

namespace iphs {

enum class DiscreteGradientKind {
  mean_value,            // averaged gradient along the segment (Gauss-Legendre)
  midpoint_gonzalez,     // midpoint gradient plus secant correction
  coordinate_increment,  // Itoh-Abe coordinate-wise secants
};

std::string to_string(DiscreteGradientKind kind);
DiscreteGradientKind parse_gradient_kind(const std::string &name);

/// A rule producing a two-point gradient that satisfies the discrete chain
/// rule  g(x,x')^T (x'-x) = f(x') - f(x)  and the consistency limit
/// g(x,x) = grad f(x).
struct DiscreteGradientMethod {
  DiscreteGradientKind kind = DiscreteGradientKind::midpoint_gonzalez;
  int quadrature_order = 5;             // mean_value only
  double coincidence_threshold = 1e-10;

  Vector evaluate(const ScalarField &f, const Vector &x, const Vector &x2) const;
};

/// Gonzalez midpoint discrete gradient. Falls back to the exact gradient at x
/// when |x2-x| <= eps * (1 + |x|).
Vector eval_midpoint_gradient(const ScalarField &f, const Vector &x,
                              const Vector &x2, double eps);

/// Mean-value (averaged) discrete gradient: the segment integral of the exact
/// gradient, approximated by Gauss-Legendre quadrature of the given order.
/// Exact, hence exactly chain-rule-satisfying, when every gradient component
/// is polynomial of degree <= 2*order-1 along the segment.
Vector eval_mean_value_gradient(const ScalarField &f, const Vector &x,
                                const Vector &x2, int order, double eps = 1e-10);

/// Itoh-Abe coordinate increment discrete gradient, index order 1..n.
/// Component i uses the partial derivative at the mixed point when
/// |x2_i - x_i| <= eps.
Vector eval_coordinate_increment_gradient(const ScalarField &f, const Vector &x,
                                          const Vector &x2, double eps);

/// |g(x,x2)^T (x2-x) - (f(x2) - f(x))|
double chain_rule_residual(const DiscreteGradientMethod &method,
                           const ScalarField &f, const Vector &x,
                           const Vector &x2);

/// Gauss-Legendre nodes and weights on [0, 1]; weights sum to 1.
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};
Quadrature gauss_legendre(int order);

}  // namespace iphs

#endif
