#ifndef IPHS_GAS_PISTON_HPP
#define IPHS_GAS_PISTON_HPP

#include "iphs/scalar_field.hpp"
#include "iphs/system.hpp"
#include "iphs/types.hpp"

namespace iphs {

/// Gas in a cylinder closed by a piston under gravity and an external force,
/// exchanging heat with a thermostat. State (S, V, q, p), inputs
/// (thermostat temperature u1, external force u2).
struct GasPistonParams {
  double m = 1.0;         // piston mass
  double A = 1.0;         // piston area
  double g_grav = 10.0;   // gravity constant
  double mu = 0.5;        // friction coefficient, >= 0
  double lambda_e = 1.0;  // heat conduction coefficient
  double c = 1.5;         // heat-capacity exponent (3/2 for a mono-atomic gas)
  double N0 = 1.0;        // mole number
  double R = 1.0;         // gas constant
  double U_ref = 1.0;
  double V_ref = 1.0;
  double S_ref = 0.0;
};

struct GasPistonPorts {
  bool heat = true;   // irreversible thermostat port on u1
  bool force = true;  // reversible mechanical port on u2
};

/// U = U_ref exp((S - S_ref)/(c N0 R)) (V_ref / V)^(1/c). Throws DomainError
/// for V <= 0.
double internal_energy(double S, double V, const GasPistonParams &p);

/// dU/dS = U / (c N0 R); strictly positive.
double temperature(double S, double V, const GasPistonParams &p);

/// -dU/dV = U / (c V); strictly positive.
double pressure(double S, double V, const GasPistonParams &p);

/// Total energy U(S,V) + p^2/(2m) + m g q as a 4-state field.
ScalarField gas_piston_hamiltonian(const GasPistonParams &p);

/// The (linear) entropy coordinate S(x) = x_1.
ScalarField gas_piston_entropy();

/// Assembles the 4-state, 2-input system: friction coupling J with
/// gamma = mu/T (omitted when mu = 0), mechanical coupling M, heat port with
/// gamma_port = lambda_e/(T u1^2) and tau = (1,0), reversible force port on
/// the momentum row, and domain guard V > 0.
IphsSystem build_gas_piston(const GasPistonParams &p, GasPistonPorts ports = {});

}  // namespace iphs

#endif
