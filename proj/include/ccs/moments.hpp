#pragma once

// Closed-form observables of a correlated coherent state: second moments,
// the p-q correlator, both sides of the Schroedinger uncertainty relation,
// and the thermal quantities derived from the Planck energy
// E = (hbar*omega/2) coth(x).

#include <utility>

#include "ccs/states.hpp"

namespace ccs {

// Operations reject alpha beyond this point (sec alpha would exceed 1e6 and
// keep growing without bound towards pi/2).
double alpha_overflow_limit();

// Second-moment bundle of one state. cov_pq is the signed symmetrized
// covariance Re<dp dq>; for the canonical +i beta exponent it equals
// -(hbar/2) tan(alpha). The correlator magnitude carries the fixed
// commutator contribution: correlator_mag^2 = cov_pq^2 + (hbar/2)^2.
struct MomentSet {
  double var_q = 0.0;
  double var_p = 0.0;
  double cov_pq = 0.0;
  double correlator_mag = 0.0;
  double uncertainty_product = 0.0;
};

// Both sides of dp*dq >= |<dp dq>| plus derived diagnostics. The effective
// action sqrt((hbar/2)^2 tan^2(alpha) + (hbar/2)^2) coincides with the
// correlator magnitude; saturation_defect = (lhs - rhs)/rhs is rounding-level
// for every valid state.
struct UncertaintyReport {
  double sur_lhs = 0.0;
  double sur_rhs = 0.0;
  double saturation_defect = 0.0;
  double heisenberg_bound = 0.0;
  double effective_action = 0.0;
};

// Uncertainty square in the dimensionless phase plane: equal sides
// sqrt(coth(x)/2) and area coth(x)/4 (1/4 at T = 0).
struct PhaseSquare {
  double side_P = 0.0;
  double side_Q = 0.0;
  double area = 0.0;
};

// (dq)^2 = hbar / (2 gamma cos alpha)
double variance_q(const AlphaState& state);

// (dp)^2 = gamma^2 (dq)^2 = (hbar gamma / 2) / cos alpha. Computed as
// gamma^2 * variance_q so the proportionality holds exactly.
double variance_p(const AlphaState& state);

// Signed covariance Re<dp dq> = -(hbar/2) tan alpha.
double covariance_pq(const AlphaState& state);

// |<dp dq>| = sqrt((hbar/2)^2 tan^2 alpha + (hbar/2)^2) = (hbar/2)/cos alpha
double correlator_magnitude(const AlphaState& state);

// J = sqrt((hbar/2)^2 tan^2 alpha + (hbar/2)^2), floor hbar/2 at alpha = 0.
// Evaluated through the radicand (not through sec alpha) so that comparing
// it with correlator_magnitude exercises both algebraic routes.
double effective_action(const AlphaState& state);

MomentSet moment_set(const AlphaState& state);
UncertaintyReport sur_report(const AlphaState& state);

// E = (hbar omega / 2) coth(x); the T = 0 value is the vacuum energy
// hbar omega / 2.
double planck_energy(const ThermalSpec& spec);

// Mean kinetic and potential energies; each is exactly half the Planck
// energy.
std::pair<double, double> mean_kinetic_potential(const ThermalSpec& spec);

// ((hbar/2omega) coth x, (hbar omega/2) coth x); equal to the AlphaState
// variances at alpha = alpha_from_temperature(spec) with gamma = omega.
std::pair<double, double> thermal_variances(const ThermalSpec& spec);

PhaseSquare phase_plane_square(const ThermalSpec& spec);

}  // namespace ccs
