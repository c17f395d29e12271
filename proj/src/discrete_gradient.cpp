#include "iphs/discrete_gradient.hpp"

#include <cmath>
#include <stdexcept>

namespace iphs {

namespace {

void check_pair(const ScalarField &f, const Vector &x, const Vector &x2) {
  if (x.size() != f.dimension() || x2.size() != f.dimension()) {
    throw std::invalid_argument("discrete gradient: state dimension mismatch");
  }
}

bool coincident(const Vector &x, const Vector &x2, double eps) {
  return !((x2 - x).norm() > eps * (1.0 + x.norm()));
}

}  // namespace

std::string to_string(DiscreteGradientKind kind) {
  switch (kind) {
    case DiscreteGradientKind::mean_value: return "mean_value";
    case DiscreteGradientKind::midpoint_gonzalez: return "midpoint_gonzalez";
    case DiscreteGradientKind::coordinate_increment: return "coordinate_increment";
  }
  return "unknown";
}

DiscreteGradientKind parse_gradient_kind(const std::string &name) {
  if (name == "mean_value") return DiscreteGradientKind::mean_value;
  if (name == "midpoint" || name == "midpoint_gonzalez" || name == "gonzalez") {
    return DiscreteGradientKind::midpoint_gonzalez;
  }
  if (name == "coordinate_increment" || name == "itoh_abe") {
    return DiscreteGradientKind::coordinate_increment;
  }
  throw std::invalid_argument("unknown discrete gradient kind: " + name);
}

Quadrature gauss_legendre(int order) {
  if (order < 1) {
    throw std::invalid_argument("gauss_legendre: order must be >= 1");
  }
  Quadrature q;
  q.nodes.resize(order);
  q.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    // Root of P_n by Newton iteration from the Chebyshev estimate.
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double deriv = 0.0;
    for (int it = 0; it < 100; ++it) {
      double pm = 1.0, pk = x;
      for (int k = 2; k <= order; ++k) {
        const double pn = ((2.0 * k - 1.0) * x * pk - (k - 1.0) * pm) / k;
        pm = pk;
        pk = pn;
      }
      if (order == 1) {
        pk = x;
        pm = 1.0;
      }
      deriv = order * (x * pk - pm) / (x * x - 1.0);
      const double dx = pk / deriv;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // Map from [-1, 1] to [0, 1]; the standard weight 2/((1-x^2) P'^2) halves.
    q.nodes[order - 1 - i] = 0.5 * (x + 1.0);
    q.weights[order - 1 - i] = 1.0 / ((1.0 - x * x) * deriv * deriv);
  }
  return q;
}

Vector eval_midpoint_gradient(const ScalarField &f, const Vector &x,
                              const Vector &x2, double eps) {
  check_pair(f, x, x2);
  if (coincident(x, x2, eps)) return f.gradient(x);
  const Vector d = x2 - x;
  Vector g = f.gradient(0.5 * (x + x2));
  const double corr = (f.value(x2) - f.value(x) - g.dot(d)) / d.squaredNorm();
  g += corr * d;
  return g;
}

Vector eval_mean_value_gradient(const ScalarField &f, const Vector &x,
                                const Vector &x2, int order, double eps) {
  check_pair(f, x, x2);
  if (order < 1) {
    throw std::invalid_argument("eval_mean_value_gradient: order must be >= 1");
  }
  if (coincident(x, x2, eps)) return f.gradient(x);
  const Quadrature q = gauss_legendre(order);
  const Vector d = x2 - x;
  Vector acc = Vector::Zero(x.size());
  for (int i = 0; i < order; ++i) {
    acc += q.weights[i] * f.gradient(x + q.nodes[i] * d);
  }
  return acc;
}

Vector eval_coordinate_increment_gradient(const ScalarField &f, const Vector &x,
                                          const Vector &x2, double eps) {
  check_pair(f, x, x2);
  if ((x2.array() == x.array()).all()) return f.gradient(x);
  const int n = f.dimension();
  Vector out(n);
  Vector mixed = x;
  double lo = f.value(mixed);
  for (int i = 0; i < n; ++i) {
    const double di = x2[i] - x[i];
    if (std::abs(di) > eps) {
      mixed[i] = x2[i];
      const double hi = f.value(mixed);
      out[i] = (hi - lo) / di;
      lo = hi;
    } else {
      out[i] = f.gradient(mixed)[i];
      mixed[i] = x2[i];
      lo = f.value(mixed);
    }
  }
  return out;
}

Vector DiscreteGradientMethod::evaluate(const ScalarField &f, const Vector &x,
                                        const Vector &x2) const {
  switch (kind) {
    case DiscreteGradientKind::mean_value:
      return eval_mean_value_gradient(f, x, x2, quadrature_order,
                                      coincidence_threshold);
    case DiscreteGradientKind::midpoint_gonzalez:
      return eval_midpoint_gradient(f, x, x2, coincidence_threshold);
    case DiscreteGradientKind::coordinate_increment:
      return eval_coordinate_increment_gradient(f, x, x2, coincidence_threshold);
  }
  throw std::logic_error("DiscreteGradientMethod: invalid kind");
}

double chain_rule_residual(const DiscreteGradientMethod &method,
                           const ScalarField &f, const Vector &x,
                           const Vector &x2) {
  const Vector g = method.evaluate(f, x, x2);
  return std::abs(g.dot(x2 - x) - (f.value(x2) - f.value(x)));
}

}  // namespace iphs
