#ifndef IPHS_TYPES_HPP
#define IPHS_TYPES_HPP

#include <Eigen/Dense>
#include <stdexcept>

namespace iphs {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Thrown when a state leaves the admissible domain of a system
/// (e.g. non-positive gas volume).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace iphs

#endif
