#include "ccs/states.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace ccs {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

// cosh(2 tau) leaves the double range just above 2 tau = 710.4.
constexpr double max_double_tau = 710.0;

// Above this Planck argument, coth x - 1 and 1/sinh x fall below what the
// closed forms can resolve in double precision; the state is the cold
// vacuum exactly.
constexpr double saturation_x = 20.0;

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw InvalidParameter(std::string(what) + " must be finite");
  }
}

}  // namespace

Constants::Constants(double hbar, double k_B) : hbar_(hbar), k_B_(k_B) {
  require_finite(hbar, "hbar");
  require_finite(k_B, "k_B");
  if (hbar_ <= 0.0) throw InvalidParameter("hbar must be > 0");
  if (k_B_ <= 0.0) throw InvalidParameter("k_B must be > 0");
}

AlphaState::AlphaState(double alpha, double gamma, Constants constants)
    : alpha_(alpha), gamma_(gamma), constants_(constants) {
  require_finite(alpha, "alpha");
  require_finite(gamma, "gamma");
  if (alpha_ < 0.0 || alpha_ >= half_pi) {
    throw InvalidParameter("alpha must lie in [0, pi/2)");
  }
  if (gamma_ <= 0.0) throw InvalidParameter("gamma must be > 0");
}

BogoliubovState::BogoliubovState(double tau, double phi, double omega,
                                 Constants constants)
    : tau_(tau), phi_(phi), omega_(omega), constants_(constants) {
  require_finite(tau, "tau");
  require_finite(phi, "phi");
  require_finite(omega, "omega");
  if (tau_ < 0.0) throw InvalidParameter("tau must be >= 0");
  if (omega_ <= 0.0) throw InvalidParameter("omega must be > 0");
}

ThermalSpec::ThermalSpec(double temperature, double omega, Constants constants)
    : temperature_(temperature), omega_(omega), constants_(constants) {
  require_finite(temperature, "temperature");
  require_finite(omega, "omega");
  if (temperature_ < 0.0) throw InvalidParameter("temperature must be >= 0");
  if (omega_ <= 0.0) throw InvalidParameter("omega must be > 0");
}

double GaussianForm::norm() const {
  return std::pow(2.0 * std::numbers::pi * sigma_sq, -0.25);
}

std::complex<double> GaussianForm::exponent_coefficient() const {
  return std::complex<double>(1.0, beta) / (4.0 * sigma_sq);
}

std::complex<double> GaussianForm::exponent(double q) const {
  return -q * q * exponent_coefficient();
}

std::complex<double> GaussianForm::amplitude(double q) const {
  return norm() * std::exp(exponent(q));
}

std::complex<double> GaussianForm::derivative(double q) const {
  return -2.0 * q * exponent_coefficient() * amplitude(q);
}

GaussianForm gaussian_form(const AlphaState& state) {
  return {base_variance(state) / std::cos(state.alpha()),
          std::tan(state.alpha()), state.constants().hbar()};
}

GaussianForm gaussian_form(const BogoliubovState& state) {
  if (2.0 * state.tau() > max_double_tau) {
    throw ParameterOverflow("cosh(2 tau) exceeds the double range");
  }
  const double t2 = 2.0 * state.tau();
  const double s0_sq = state.constants().hbar() / (2.0 * state.omega());
  const double factor =
      std::cosh(t2) - std::sinh(t2) * std::cos(2.0 * state.phi());
  // +i beta is the canonical orientation; the raw Bogoliubov solution
  // carries the opposite phase sign and is flipped here.
  const double beta = std::sinh(t2) * std::sin(2.0 * state.phi());
  return {s0_sq * factor, beta, state.constants().hbar()};
}

GaussianForm gaussian_form(const ThermalSpec& spec) {
  if (spec.temperature() == 0.0) {
    throw DegenerateTemperature(
        "T = 0 is the exact cold vacuum; construct the alpha = 0 state");
  }
  const double x = thermal_argument(spec);
  const double s0_sq = spec.constants().hbar() / (2.0 * spec.omega());
  if (x >= saturation_x) {
    return {s0_sq, 0.0, spec.constants().hbar()};
  }
  return {s0_sq * coth_clamped(x), 1.0 / std::sinh(x),
          spec.constants().hbar()};
}

double base_variance(const AlphaState& state) {
  return state.constants().hbar() / (2.0 * state.gamma());
}

std::complex<double> psi_alpha(const AlphaState& state, double q) {
  require_finite(q, "q");
  return gaussian_form(state).amplitude(q);
}

std::complex<double> psi_tau_phi(const BogoliubovState& state, double q) {
  require_finite(q, "q");
  return gaussian_form(state).amplitude(q);
}

std::complex<double> psi_thermal(const ThermalSpec& spec, double q) {
  require_finite(q, "q");
  return gaussian_form(spec).amplitude(q);
}

WaveSample wave_sample(const AlphaState& state, double q) {
  return {q, psi_alpha(state, q)};
}

std::pair<std::complex<double>, std::complex<double>> bogoliubov_uv(
    const BogoliubovState& state) {
  if (2.0 * state.tau() > max_double_tau) {
    throw ParameterOverflow("cosh(2 tau) exceeds the double range");
  }
  return {std::polar(std::cosh(state.tau()), state.phi()),
          std::polar(std::sinh(state.tau()), -state.phi())};
}

double thermal_argument(const ThermalSpec& spec) {
  if (spec.temperature() == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return spec.constants().hbar() * spec.omega() /
         (2.0 * spec.constants().k_B() * spec.temperature());
}

double coth_clamped(double x) {
  if (x >= saturation_x) return 1.0;
  return 1.0 / std::tanh(x);
}

double alpha_from_temperature(const ThermalSpec& spec) {
  if (spec.temperature() == 0.0) return 0.0;
  const double x = thermal_argument(spec);
  // 1/sinh(x) without overflow for any x > 0; alpha = atan(1/sinh x) is the
  // overflow-safe form of arccos(tanh x).
  const double inv_sinh = 2.0 * std::exp(-x) / (-std::expm1(-2.0 * x));
  return std::atan(inv_sinh);
}

double temperature_from_alpha(const AlphaState& state, double omega) {
  require_finite(omega, "omega");
  if (omega <= 0.0) throw InvalidParameter("omega must be > 0");
  if (state.alpha() == 0.0) {
    throw ColdVacuumLimit("alpha = 0 maps to T = 0 exactly");
  }
  // x = atanh(cos alpha), evaluated as asinh(cot alpha) which stays accurate
  // at both ends of (0, pi/2).
  const double x = std::asinh(1.0 / std::tan(state.alpha()));
  return state.constants().hbar() * omega /
         (2.0 * state.constants().k_B() * x);
}

double tau_from_alpha(double alpha) {
  require_finite(alpha, "alpha");
  if (alpha < 0.0 || alpha >= half_pi) {
    throw InvalidParameter("alpha must lie in [0, pi/2)");
  }
  return 0.5 * std::asinh(std::tan(alpha));
}

double alpha_from_tau(double tau) {
  require_finite(tau, "tau");
  if (tau < 0.0) throw InvalidParameter("tau must be >= 0");
  return std::atan(std::sinh(2.0 * tau));
}

AlphaState to_alpha_state(const ThermalSpec& spec) {
  return {alpha_from_temperature(spec), spec.omega(), spec.constants()};
}

BogoliubovState to_bogoliubov(const AlphaState& state) {
  return {tau_from_alpha(state.alpha()), std::numbers::pi / 4.0,
          state.gamma(), state.constants()};
}

}  // namespace ccs
