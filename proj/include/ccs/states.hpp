#pragma once

// Correlated coherent states of a unit-mass oscillator in three equivalent
// parametrizations:
//
//   AlphaState       psi_a(q)  = [2 pi s0^2 / cos a]^{-1/4}
//                                exp{ -q^2 e^{ia} / (4 s0^2) },  s0^2 = hbar/(2 gamma)
//   BogoliubovState  psi_tp(q) via the (u, v) quasiparticle transformation,
//                                u = cosh(tau) e^{i phi}, v = sinh(tau) e^{-i phi}
//   ThermalSpec      psi_T(q)  with x = hbar*omega / (2 k_B T),
//                                variance factor coth x, phase 1/sinh x
//
// All three reduce to the same canonical complex Gaussian
//
//   psi(q) = (2 pi sigma^2)^{-1/4} exp{ -q^2 (1 + i beta) / (4 sigma^2) }
//
// where sigma^2 is the coordinate variance and beta the correlation phase
// coefficient (beta = tan a for the alpha form). The +i beta orientation is
// the canonical convention throughout this library; the Bogoliubov form is
// mapped into it by flipping the sign of its phase coefficient. The maps
// tan a = sinh 2tau (at phi = pi/4) and 1/cos a = coth x identify the three
// families; cross-parametrization operations require gamma = omega.
//
// Types are immutable after construction and all operations are pure.

#include <complex>
#include <utility>

#include "ccs/errors.hpp"

namespace ccs {

// Physical constants. Units are free; the defaults hbar = k_B = 1 give the
// dimensionless convention used by the CLI. The oscillator mass is fixed
// to 1 and is not a parameter.
class Constants {
 public:
  Constants() = default;
  Constants(double hbar, double k_B);

  double hbar() const { return hbar_; }
  double k_B() const { return k_B_; }

  static constexpr double mass = 1.0;

 private:
  double hbar_ = 1.0;
  double k_B_ = 1.0;
};

// Phase parametrization: angle alpha in [0, pi/2), stiffness gamma > 0.
// alpha = 0 is the cold vacuum (real Gaussian); alpha -> pi/2 is excluded.
class AlphaState {
 public:
  AlphaState(double alpha, double gamma, Constants constants = {});

  double alpha() const { return alpha_; }
  double gamma() const { return gamma_; }
  const Constants& constants() const { return constants_; }

 private:
  double alpha_;
  double gamma_;
  Constants constants_;
};

// Bogoliubov parametrization: squeezing tau >= 0, angle phi, frequency
// omega > 0. The correlated family has phi = pi/4.
class BogoliubovState {
 public:
  BogoliubovState(double tau, double phi, double omega,
                  Constants constants = {});

  double tau() const { return tau_; }
  double phi() const { return phi_; }
  double omega() const { return omega_; }
  const Constants& constants() const { return constants_; }

 private:
  double tau_;
  double phi_;
  double omega_;
  Constants constants_;
};

// Equilibrium specification: temperature T >= 0 at frequency omega > 0.
class ThermalSpec {
 public:
  ThermalSpec(double temperature, double omega, Constants constants = {});

  double temperature() const { return temperature_; }
  double omega() const { return omega_; }
  const Constants& constants() const { return constants_; }

 private:
  double temperature_;
  double omega_;
  Constants constants_;
};

// One evaluation record of a wavefunction.
struct WaveSample {
  double q = 0.0;
  std::complex<double> amplitude{};
};

// Canonical complex-Gaussian data common to all three parametrizations:
//   psi(q) = (2 pi sigma_sq)^{-1/4} exp{ -q^2 (1 + i beta) / (4 sigma_sq) }.
struct GaussianForm {
  double sigma_sq = 0.0;  // coordinate variance of |psi|^2
  double beta = 0.0;      // correlation phase coefficient
  double hbar = 1.0;

  double norm() const;                               // (2 pi sigma_sq)^{-1/4}
  std::complex<double> exponent_coefficient() const; // (1 + i beta)/(4 sigma_sq)
  std::complex<double> exponent(double q) const;
  std::complex<double> amplitude(double q) const;
  std::complex<double> derivative(double q) const;   // analytic d psi / dq
};

GaussianForm gaussian_form(const AlphaState& state);
GaussianForm gaussian_form(const BogoliubovState& state);
GaussianForm gaussian_form(const ThermalSpec& spec);  // throws for T = 0

// Base variance s0^2 = hbar / (2 gamma).
double base_variance(const AlphaState& state);

// Wavefunction evaluations. All reject non-finite q.
std::complex<double> psi_alpha(const AlphaState& state, double q);
std::complex<double> psi_tau_phi(const BogoliubovState& state, double q);
std::complex<double> psi_thermal(const ThermalSpec& spec, double q);

WaveSample wave_sample(const AlphaState& state, double q);

// u = cosh(tau) e^{i phi}, v = sinh(tau) e^{-i phi}; |u|^2 - |v|^2 = 1.
// Throws ParameterOverflow once cosh(2 tau) leaves the double range.
std::pair<std::complex<double>, std::complex<double>> bogoliubov_uv(
    const BogoliubovState& state);

// Planck argument x = hbar*omega / (2 k_B T); +inf is returned for T = 0.
double thermal_argument(const ThermalSpec& spec);

// coth x for x > 0, saturated to exactly 1 for x >= 20 where the correction
// drops below double resolution.
double coth_clamped(double x);

// Parameter maps between the families. alpha_from_temperature(T = 0) = 0
// exactly; temperature_from_alpha refuses alpha = 0 (ColdVacuumLimit).
double alpha_from_temperature(const ThermalSpec& spec);
double temperature_from_alpha(const AlphaState& state, double omega);
double tau_from_alpha(double alpha);
double alpha_from_tau(double tau);

// Convenience constructors along the gamma = omega identification.
AlphaState to_alpha_state(const ThermalSpec& spec);
BogoliubovState to_bogoliubov(const AlphaState& state);  // phi = pi/4

}  // namespace ccs
