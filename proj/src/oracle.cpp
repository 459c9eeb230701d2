#include "ccs/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace ccs::oracle {

namespace {

using kernels::Execution;

bool power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

double window(const GaussianForm& form, const QuadratureConfig& cfg) {
  return cfg.half_width_sigmas * std::sqrt(form.sigma_sq);
}

}  // namespace

void validate(const QuadratureConfig& cfg) {
  if (cfg.half_width_sigmas < 6.0) {
    throw InvalidParameter("half_width_sigmas must be >= 6");
  }
  if (!(cfg.rel_tolerance > std::numeric_limits<double>::epsilon())) {
    throw InvalidParameter("rel_tolerance must exceed machine epsilon");
  }
  if (cfg.initial_points < 3 || !power_of_two(cfg.initial_points - 1)) {
    throw InvalidParameter("initial_points must be a power of two plus one");
  }
  if (cfg.max_refinements < 0) {
    throw InvalidParameter("max_refinements must be >= 0");
  }
}

GridWavefunction sample_state(const GaussianForm& form,
                              const QuadratureConfig& cfg, Execution exec) {
  validate(cfg);
  const std::int64_t n = cfg.initial_points;
  const std::int64_t half = (n - 1) / 2;
  const double spacing = 2.0 * window(form, cfg) / static_cast<double>(n - 1);

  GridWavefunction grid;
  grid.spacing = spacing;
  grid.q.resize(static_cast<std::size_t>(n));
  grid.amplitude.resize(static_cast<std::size_t>(n));
  kernels::for_each_index(
      n,
      [&](std::int64_t m) {
        const auto k = static_cast<std::size_t>(m);
        grid.q[k] = static_cast<double>(m - half) * spacing;
        grid.amplitude[k] = form.amplitude(grid.q[k]);
      },
      exec);

  const double norm = grid_norm(grid);
  if (std::abs(norm - 1.0) > 1e-6) {
    throw InvalidParameter("sampled grid is not normalized to 1e-6");
  }
  return grid;
}

double grid_norm(const GridWavefunction& grid) {
  const auto n = static_cast<std::int64_t>(grid.q.size());
  return grid.spacing *
         kernels::blocked_sum<double>(
             n,
             [&](std::int64_t m) {
               return std::norm(grid.amplitude[static_cast<std::size_t>(m)]);
             },
             Execution::serial);
}

double grid_second_moment(const GridWavefunction& grid) {
  const auto n = static_cast<std::int64_t>(grid.q.size());
  return grid.spacing *
         kernels::blocked_sum<double>(
             n,
             [&](std::int64_t m) {
               const auto k = static_cast<std::size_t>(m);
               return grid.q[k] * grid.q[k] * std::norm(grid.amplitude[k]);
             },
             Execution::serial);
}

double quad_norm(const GaussianForm& form, const QuadratureConfig& cfg,
                 Execution exec) {
  const double w = window(form, cfg);
  return adaptive_integral<double>(
      [&](double q) { return std::norm(form.amplitude(q)); }, -w, w, cfg,
      exec);
}

double quad_variance_q(const GaussianForm& form, const QuadratureConfig& cfg,
                       Execution exec) {
  const double w = window(form, cfg);
  return adaptive_integral<double>(
      [&](double q) { return q * q * std::norm(form.amplitude(q)); }, -w, w,
      cfg, exec);
}

double quad_variance_p(const GaussianForm& form, const QuadratureConfig& cfg,
                       Execution exec) {
  const double w = window(form, cfg);
  const double h2 = form.hbar * form.hbar;
  return adaptive_integral<double>(
      [&](double q) { return h2 * std::norm(form.derivative(q)); }, -w, w, cfg,
      exec);
}

std::complex<double> quad_correlator(const GaussianForm& form,
                                     const QuadratureConfig& cfg,
                                     Execution exec) {
  const double w = window(form, cfg);
  const std::complex<double> c = form.exponent_coefficient();
  const std::complex<double> minus_i_hbar(0.0, -form.hbar);
  // psi^* (-i hbar) d/dq (q psi) = -i hbar |psi|^2 (1 - 2 c q^2)
  return adaptive_integral<std::complex<double>>(
      [&](double q) {
        return minus_i_hbar * (1.0 - 2.0 * c * q * q) *
               std::norm(form.amplitude(q));
      },
      -w, w, cfg, exec);
}

double quad_norm(const AlphaState& s, const QuadratureConfig& cfg) {
  return quad_norm(gaussian_form(s), cfg);
}
double quad_norm(const BogoliubovState& s, const QuadratureConfig& cfg) {
  return quad_norm(gaussian_form(s), cfg);
}
double quad_norm(const ThermalSpec& s, const QuadratureConfig& cfg) {
  return quad_norm(gaussian_form(s), cfg);
}
double quad_variance_q(const AlphaState& s, const QuadratureConfig& cfg) {
  return quad_variance_q(gaussian_form(s), cfg);
}
double quad_variance_p(const AlphaState& s, const QuadratureConfig& cfg) {
  return quad_variance_p(gaussian_form(s), cfg);
}
std::complex<double> quad_correlator(const AlphaState& s,
                                     const QuadratureConfig& cfg) {
  return quad_correlator(gaussian_form(s), cfg);
}

GridWavefunction momentum_distribution(const GridWavefunction& psi,
                                       double hbar, Execution exec) {
  const auto n = static_cast<std::int64_t>(psi.q.size());
  if (n < 5) throw InvalidParameter("grid too small");
  const double dq = psi.spacing;
  const double dp =
      2.0 * std::numbers::pi * hbar / (static_cast<double>(n) * dq);

  // Momentum spread estimated from the grid itself (finite differences),
  // so the coarseness check does not rely on any closed form.
  double fd_var = 0.0;
  for (std::int64_t m = 1; m + 1 < n; ++m) {
    const auto k = static_cast<std::size_t>(m);
    fd_var += std::norm((psi.amplitude[k + 1] - psi.amplitude[k - 1]) /
                        (2.0 * dq));
  }
  fd_var *= hbar * hbar * dq;
  const double sigma_p = std::sqrt(fd_var);
  const double half_width = 0.5 * static_cast<double>(n - 1) * dp;
  if (half_width < 6.0 * sigma_p) {
    throw GridTooCoarse(
        "momentum half-width below 6 momentum standard deviations");
  }

  GridWavefunction out;
  out.spacing = dp;
  out.q.resize(psi.q.size());
  const std::int64_t half = (n - 1) / 2;
  for (std::int64_t j = 0; j < n; ++j) {
    out.q[static_cast<std::size_t>(j)] = static_cast<double>(j - half) * dp;
  }
  out.amplitude =
      kernels::fourier_transform(psi.q, psi.amplitude, out.q, dq, hbar, exec);
  return out;
}

double annihilation_residual(const GridWavefunction& grid,
                             std::complex<double> uv_ratio, double omega,
                             double hbar) {
  const auto n = static_cast<std::int64_t>(grid.q.size());
  if (n < 5) throw InvalidParameter("grid too small");
  const std::complex<double> factor = uv_ratio * (omega / hbar);
  const double inv_12h = 1.0 / (12.0 * grid.spacing);

  double max_residual = 0.0;
  double max_psi = 0.0;
  for (std::int64_t m = 0; m < n; ++m) {
    max_psi = std::max(max_psi,
                       std::abs(grid.amplitude[static_cast<std::size_t>(m)]));
  }
  for (std::int64_t m = 2; m + 2 < n; ++m) {
    const auto k = static_cast<std::size_t>(m);
    const std::complex<double> d =
        (-grid.amplitude[k + 2] + 8.0 * grid.amplitude[k + 1] -
         8.0 * grid.amplitude[k - 1] + grid.amplitude[k - 2]) *
        inv_12h;
    const double r = std::abs(d + factor * grid.q[k] * grid.amplitude[k]);
    max_residual = std::max(max_residual, r);
  }
  return max_residual / max_psi;
}

double annihilation_residual(const BogoliubovState& state,
                             const QuadratureConfig& cfg) {
  const GridWavefunction grid = sample_state(gaussian_form(state), cfg);
  const auto [u, v] = bogoliubov_uv(state);
  return annihilation_residual(grid, (u - v) / (u + v), state.omega(),
                               state.constants().hbar());
}

}  // namespace ccs::oracle
