#include "iphs/scalar_field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace iphs {

ScalarField::ScalarField(int dimension, ValueFn value, GradientFn gradient)
    : dim_(dimension), value_(std::move(value)), gradient_(std::move(gradient)) {
  if (dim_ < 1) {
    throw std::invalid_argument("ScalarField: dimension must be positive");
  }
  if (!value_ || !gradient_) {
    throw std::invalid_argument("ScalarField: value and gradient functions required");
  }
}

void ScalarField::check_dimension(const Vector &x) const {
  if (x.size() != dim_) {
    throw std::invalid_argument("ScalarField: expected dimension " +
                                std::to_string(dim_) + ", got " +
                                std::to_string(x.size()));
  }
}

double ScalarField::value(const Vector &x) const {
  check_dimension(x);
  return value_(x);
}

Vector ScalarField::gradient(const Vector &x) const {
  check_dimension(x);
  Vector g = gradient_(x);
  if (g.size() != dim_) {
    throw std::invalid_argument("ScalarField: gradient returned wrong dimension");
  }
  return g;
}

Vector numeric_gradient(const std::function<double(const Vector &)> &f,
                        const Vector &x, double step) {
  if (!(step > 0.0)) {
    throw std::invalid_argument("numeric_gradient: step must be positive");
  }
  Vector g(x.size());
  Vector probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + step;
    const double hi = f(probe);
    probe[i] = x[i] - step;
    const double lo = f(probe);
    probe[i] = x[i];
    g[i] = (hi - lo) / (2.0 * step);
  }
  return g;
}

double max_gradient_deviation(const ScalarField &f,
                              const std::vector<Vector> &samples, double step) {
  double worst = 0.0;
  for (const Vector &x : samples) {
    const Vector exact = f.gradient(x);
    const Vector approx =
        numeric_gradient([&f](const Vector &z) { return f.value(z); }, x, step);
    const double scale = 1.0 + exact.cwiseAbs().maxCoeff();
    worst = std::max(worst, (exact - approx).cwiseAbs().maxCoeff() / scale);
  }
  return worst;
}

}  // namespace iphs
