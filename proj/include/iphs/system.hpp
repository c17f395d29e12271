#ifndef IPHS_SYSTEM_HPP
#define IPHS_SYSTEM_HPP

#include <functional>
#include <string>
#include <vector>

#include "iphs/scalar_field.hpp"
#include "iphs/types.hpp"

namespace iphs {

/// Constant skew-symmetric structure matrix. Skewness is validated at
/// construction to 1e-14 (relative to the largest entry).
class SkewMatrix {
 public:
  explicit SkewMatrix(Matrix entries);

  /// Bypasses the skewness check. Intended for building deliberately broken
  /// systems that validate_structure must reject.
  static SkewMatrix unchecked(Matrix entries);

  int dimension() const { return static_cast<int>(entries_.rows()); }
  const Matrix &entries() const { return entries_; }

 private:
  struct unchecked_tag {};
  SkewMatrix(Matrix entries, unchecked_tag) : entries_(std::move(entries)) {}

  Matrix entries_;
};

/// gamma(x) * {S,H}_J * J grad(H) contribution; gamma must be strictly
/// positive on the admissible domain.
struct DissipationTerm {
  SkewMatrix J;
  std::function<double(const Vector &)> gamma;
};

/// M grad(H) contribution; the entropy must be a Casimir function of M.
struct ReversibleInternalTerm {
  SkewMatrix M;
};

/// Irreversible port: input matrix g (n x m), strictly positive
/// gamma(x, u), and the constant tau weights of the extended entropy.
struct IrreversiblePort {
  Matrix g;
  std::function<double(const Vector &, const Vector &)> gamma;
  Vector tau;
};

/// Reversible port: input matrix g_S (n x m). The port bracket must vanish,
/// which is enforced as grad(S)^T g_S = 0 together with tau = 0.
struct ReversiblePort {
  Matrix g;
  Vector tau;
};

/// Named scalar function of the state recorded along trajectories
/// (temperature, pressure, ...).
struct Observable {
  std::string name;
  std::function<double(const Vector &)> fn;
};

struct SystemParts {
  int state_dim = 0;
  int input_dim = 0;
  ScalarField hamiltonian;
  ScalarField entropy;
  bool entropy_is_linear = true;
  std::vector<DissipationTerm> dissipation;
  std::vector<ReversibleInternalTerm> reversible_internal;
  std::vector<IrreversiblePort> irreversible_ports;
  std::vector<ReversiblePort> reversible_ports;
  std::function<bool(const Vector &)> domain_guard;  // empty: all states admissible
  std::vector<std::string> state_names;              // empty: x1..xn
  std::vector<Observable> observables;
};

/// An irreversible port-Hamiltonian control system: energy and entropy
/// functions, skew structure matrices with positive dissipation coefficients,
/// and port maps for exchange with the environment. Immutable after
/// construction; all evaluation is pure.
class IphsSystem {
 public:
  explicit IphsSystem(SystemParts parts);

  int state_dim() const { return parts_.state_dim; }
  int input_dim() const { return parts_.input_dim; }
  const ScalarField &hamiltonian() const { return parts_.hamiltonian; }
  const ScalarField &entropy() const { return parts_.entropy; }
  bool entropy_is_linear() const { return parts_.entropy_is_linear; }
  const std::vector<DissipationTerm> &dissipation() const { return parts_.dissipation; }
  const std::vector<ReversibleInternalTerm> &reversible_internal() const {
    return parts_.reversible_internal;
  }
  const std::vector<IrreversiblePort> &irreversible_ports() const {
    return parts_.irreversible_ports;
  }
  const std::vector<ReversiblePort> &reversible_ports() const {
    return parts_.reversible_ports;
  }
  const std::vector<std::string> &state_names() const { return parts_.state_names; }
  const std::vector<Observable> &observables() const { return parts_.observables; }

  bool in_domain(const Vector &x) const { return parts_.domain_guard(x); }

  /// Sum of the per-port tau vectors; pairs with y in the entropy balance.
  const Vector &tau_total() const { return tau_total_; }

 private:
  SystemParts parts_;
  Vector tau_total_;
};

struct RhsResult {
  Vector dx;
  Vector y;
};

/// Continuous right-hand side and output of the control system, using exact
/// gradients. Throws DomainError when x violates the domain guard.
RhsResult continuous_rhs(const IphsSystem &sys, const Vector &x, const Vector &u);

/// gS^T J gH for precomputed discrete gradients gS, gH.
double discrete_bracket(const SkewMatrix &J, const Vector &gS, const Vector &gH);

/// (g^T gS)^T u - tau^T (g^T gH) for precomputed discrete gradients.
double discrete_port_bracket(const Matrix &g, const Vector &gS, const Vector &gH,
                             const Vector &u, const Vector &tau);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  double worst = 0.0;  // worst violation magnitude (0 when clean)
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_passed() const;
  std::string summary() const;
};

/// Structural checks of Definition-style conditions at the given sample
/// states: skew-symmetry of every J and M, the entropy Casimir condition for
/// every M, reversible-port conditions, positivity of every gamma, and
/// annihilation of the reversible port columns by tau_total. Reports, never
/// throws (except on out-of-domain samples, which violate the precondition).
ValidationReport validate_structure(const IphsSystem &sys,
                                    const std::vector<Vector> &samples);

}  // namespace iphs

#endif
