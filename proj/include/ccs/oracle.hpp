#pragma once

// Numerical verification of the closed forms, independent of them:
// refined composite-Simpson quadrature for norms, moments and the
// correlator; a discrete Fourier transform for the momentum distribution;
// and a finite-difference residual for the annihilation ODE
//   d psi / dq + (u - v)/(u + v) * (omega/hbar) * q * psi = 0.

#include <complex>
#include <cstdint>
#include <vector>

#include "ccs/kernels.hpp"
#include "ccs/states.hpp"

namespace ccs::oracle {

struct QuadratureConfig {
  double half_width_sigmas = 10.0;  // integration window [-w, w], w = k*sigma
  std::int64_t initial_points = 2049;  // 2^k + 1
  double rel_tolerance = 1e-10;
  int max_refinements = 12;
};

// Throws InvalidParameter unless half_width_sigmas >= 6, rel_tolerance is
// above machine epsilon and initial_points is a power of two plus one.
void validate(const QuadratureConfig& cfg);

// Uniform symmetric coordinate grid with sampled amplitudes.
struct GridWavefunction {
  std::vector<double> q;
  std::vector<std::complex<double>> amplitude;
  double spacing = 0.0;
};

// Samples psi on a symmetric grid of cfg.initial_points spanning
// [-w, w], w = cfg.half_width_sigmas * sigma.  Throws InvalidParameter if
// the discrete normalization lands outside 1 +/- 1e-6.
GridWavefunction sample_state(
    const GaussianForm& form, const QuadratureConfig& cfg = {},
    kernels::Execution exec = kernels::Execution::openmp);

double grid_norm(const GridWavefunction& grid);           // sum |psi|^2 dq
double grid_second_moment(const GridWavefunction& grid);  // sum q^2 |psi|^2 dq

// Composite Simpson with whole-grid doubling until the relative change of
// the result drops below cfg.rel_tolerance. Throws NonConvergence when
// cfg.max_refinements doublings are exhausted.
template <typename T, typename Fn>
T adaptive_integral(const Fn& f, double a, double b, const QuadratureConfig& cfg,
                    kernels::Execution exec = kernels::Execution::openmp) {
  validate(cfg);
  std::int64_t n = cfg.initial_points - 1;
  T previous = kernels::simpson<T>(f, a, b, n, exec);
  for (int r = 0; r < cfg.max_refinements; ++r) {
    n *= 2;
    const T current = kernels::simpson<T>(f, a, b, n, exec);
    if (std::abs(current - previous) <= cfg.rel_tolerance * std::abs(current)) {
      return current;
    }
    previous = current;
  }
  throw NonConvergence("quadrature did not meet the relative tolerance");
}

// int |psi|^2 dq (expected 1 for a normalized state).
double quad_norm(const GaussianForm& form, const QuadratureConfig& cfg = {},
                 kernels::Execution exec = kernels::Execution::openmp);

// int q^2 |psi|^2 dq
double quad_variance_q(const GaussianForm& form,
                       const QuadratureConfig& cfg = {},
                       kernels::Execution exec = kernels::Execution::openmp);

// hbar^2 int |psi'|^2 dq with the analytic Gaussian derivative (the mean
// momentum vanishes for these states).
double quad_variance_p(const GaussianForm& form,
                       const QuadratureConfig& cfg = {},
                       kernels::Execution exec = kernels::Execution::openmp);

// int psi^* (-i hbar d/dq)(q psi) dq.  Real part: signed covariance;
// imaginary part: -hbar/2 (commutator); modulus: (hbar/2)/cos alpha.
std::complex<double> quad_correlator(
    const GaussianForm& form, const QuadratureConfig& cfg = {},
    kernels::Execution exec = kernels::Execution::openmp);

// Convenience overloads for the three parametrizations.
double quad_norm(const AlphaState& s, const QuadratureConfig& cfg = {});
double quad_norm(const BogoliubovState& s, const QuadratureConfig& cfg = {});
double quad_norm(const ThermalSpec& s, const QuadratureConfig& cfg = {});
double quad_variance_q(const AlphaState& s, const QuadratureConfig& cfg = {});
double quad_variance_p(const AlphaState& s, const QuadratureConfig& cfg = {});
std::complex<double> quad_correlator(const AlphaState& s,
                                     const QuadratureConfig& cfg = {});

// Discrete Fourier transform onto the conjugate momentum grid with spacing
// 2 pi hbar / (N dq). Throws GridTooCoarse when the implied momentum
// half-width is under 6 momentum standard deviations (estimated from the
// grid itself by finite differences).
GridWavefunction momentum_distribution(
    const GridWavefunction& psi, double hbar,
    kernels::Execution exec = kernels::Execution::openmp);

// Max over the grid of |psi' + ratio (omega/hbar) q psi| / max|psi| with a
// centered five-point derivative. A large value is a meaningful result (the
// sampled function does not solve the ODE), not an error.
double annihilation_residual(const GridWavefunction& grid,
                             std::complex<double> uv_ratio, double omega,
                             double hbar);

// Residual of psi_tau_phi against its own (u, v) ratio.
double annihilation_residual(const BogoliubovState& state,
                             const QuadratureConfig& cfg = {});

}  // namespace ccs::oracle
