#include "ccs/moments.hpp"

#include <cmath>
#include <numbers>

namespace ccs {

namespace {

void check_overflow(const AlphaState& state) {
  if (state.alpha() > alpha_overflow_limit()) {
    throw ParameterOverflow("alpha within 1e-6 of pi/2");
  }
}

}  // namespace

double alpha_overflow_limit() { return std::numbers::pi / 2.0 - 1e-6; }

double variance_q(const AlphaState& state) {
  check_overflow(state);
  return base_variance(state) / std::cos(state.alpha());
}

double variance_p(const AlphaState& state) {
  // gamma^2 * var_q keeps the proportionality to var_q exact.
  return state.gamma() * state.gamma() * variance_q(state);
}

double covariance_pq(const AlphaState& state) {
  check_overflow(state);
  return -0.5 * state.constants().hbar() * std::tan(state.alpha());
}

double correlator_magnitude(const AlphaState& state) {
  check_overflow(state);
  return 0.5 * state.constants().hbar() / std::cos(state.alpha());
}

double effective_action(const AlphaState& state) {
  check_overflow(state);
  const double half_hbar = 0.5 * state.constants().hbar();
  return std::hypot(half_hbar * std::tan(state.alpha()), half_hbar);
}

MomentSet moment_set(const AlphaState& state) {
  MomentSet m;
  m.var_q = variance_q(state);
  m.var_p = variance_p(state);
  m.cov_pq = covariance_pq(state);
  m.correlator_mag = correlator_magnitude(state);
  m.uncertainty_product = m.var_q * m.var_p;
  return m;
}

UncertaintyReport sur_report(const AlphaState& state) {
  UncertaintyReport r;
  const double vq = variance_q(state);
  const double vp = variance_p(state);
  r.sur_lhs = std::sqrt(vq * vp);
  r.sur_rhs = correlator_magnitude(state);
  r.saturation_defect = (r.sur_lhs - r.sur_rhs) / r.sur_rhs;
  r.heisenberg_bound = 0.5 * state.constants().hbar();
  r.effective_action = effective_action(state);
  return r;
}

double planck_energy(const ThermalSpec& spec) {
  return 0.5 * spec.constants().hbar() * spec.omega() *
         coth_clamped(thermal_argument(spec));
}

std::pair<double, double> mean_kinetic_potential(const ThermalSpec& spec) {
  const double half = 0.5 * planck_energy(spec);
  return {half, half};
}

std::pair<double, double> thermal_variances(const ThermalSpec& spec) {
  const double c = coth_clamped(thermal_argument(spec));
  const double hbar = spec.constants().hbar();
  return {hbar / (2.0 * spec.omega()) * c, 0.5 * hbar * spec.omega() * c};
}

PhaseSquare phase_plane_square(const ThermalSpec& spec) {
  const double c = coth_clamped(thermal_argument(spec));
  const double side = std::sqrt(0.5 * c);
  return {side, side, 0.25 * c};
}

}  // namespace ccs
