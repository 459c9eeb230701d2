#include "ccs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "ccs/moments.hpp"

namespace ccs::verify {

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return v;
}

std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> v = linspace(std::log(lo), std::log(hi), n);
  for (double& x : v) x = std::exp(x);
  return v;
}

double rel_error(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

// Accumulates the worst error of one named check.
class Check {
 public:
  Check(std::string name, double tolerance) : result_{std::move(name)} {
    result_.tolerance = tolerance;
  }

  void record(double error) {
    result_.worst_error = std::max(result_.worst_error, std::abs(error));
  }

  CheckResult finish() && {
    result_.pass = result_.worst_error < result_.tolerance;
    return std::move(result_);
  }

 private:
  CheckResult result_;
};

}  // namespace

std::vector<CheckResult> run_all(const VerifyOptions& opt) {
  const Constants constants(opt.hbar, opt.k_B);
  const double half_hbar = 0.5 * opt.hbar;
  auto tol = [&](double spec_tol) {
    return opt.tolerance_override.value_or(spec_tol);
  };

  const std::vector<double> alphas = linspace(0.0, opt.alpha_max, 16);
  const std::vector<double> gammas{0.5, 1.0, 2.0};
  const std::vector<double> temperatures = logspace(1e-3, 1e3, 41);

  std::vector<CheckResult> out;

  // Quadrature vs closed forms over the alpha x gamma grid.
  {
    Check norm("normalization", tol(1e-9));
    Check vq("variance_q_quadrature", tol(1e-8));
    Check vp("variance_p_quadrature", tol(1e-8));
    Check cmod("correlator_modulus", tol(1e-8));
    Check ccov("correlator_covariance", tol(1e-8));
    Check ccom("correlator_commutator", tol(1e-10));
    for (double a : alphas) {
      for (double g : gammas) {
        const AlphaState state(a, g, constants);
        const GaussianForm form = gaussian_form(state);
        norm.record(oracle::quad_norm(form, opt.quad, opt.exec) - 1.0);
        vq.record(rel_error(oracle::quad_variance_q(form, opt.quad, opt.exec),
                            variance_q(state)));
        vp.record(rel_error(oracle::quad_variance_p(form, opt.quad, opt.exec),
                            variance_p(state)));
        const std::complex<double> corr =
            oracle::quad_correlator(form, opt.quad, opt.exec);
        cmod.record(
            rel_error(std::abs(corr), correlator_magnitude(state)));
        ccov.record((corr.real() - covariance_pq(state)) /
                    std::max(std::abs(covariance_pq(state)), half_hbar));
        ccom.record((corr.imag() + half_hbar) / half_hbar);
      }
    }
    out.push_back(std::move(norm).finish());
    out.push_back(std::move(vq).finish());
    out.push_back(std::move(vp).finish());
    out.push_back(std::move(cmod).finish());
    out.push_back(std::move(ccov).finish());
    out.push_back(std::move(ccom).finish());
  }

  // Momentum distribution through the Fourier oracle.
  {
    Check fvar("fourier_momentum_variance", tol(1e-6));
    Check fpar("fourier_parseval", tol(1e-8));
    for (double a : linspace(0.0, std::min(opt.alpha_max, 1.4), 6)) {
      const AlphaState state(a, opt.omega, constants);
      const oracle::GridWavefunction grid =
          oracle::sample_state(gaussian_form(state), opt.quad, opt.exec);
      const oracle::GridWavefunction dist =
          oracle::momentum_distribution(grid, opt.hbar, opt.exec);
      fvar.record(
          rel_error(oracle::grid_second_moment(dist), variance_p(state)));
      fpar.record(oracle::grid_norm(dist) - 1.0);
    }
    out.push_back(std::move(fvar).finish());
    out.push_back(std::move(fpar).finish());
  }

  // Annihilation ODE residual for the correlated family (phi = pi/4).
  // The five-point derivative needs a finer grid than the quadrature does,
  // so the sampling resolution is doubled here.
  {
    Check res("annihilation_residual", tol(1e-6));
    oracle::QuadratureConfig fine = opt.quad;
    fine.initial_points = 2 * (fine.initial_points - 1) + 1;
    for (double a : alphas) {
      const BogoliubovState state(tau_from_alpha(a), std::numbers::pi / 4.0,
                                  opt.omega, constants);
      res.record(oracle::annihilation_residual(state, fine));
    }
    out.push_back(std::move(res).finish());
  }

  // Pointwise agreement of the three parametrizations (gamma = omega).
  {
    Check mod("equivalence_modulus", tol(1e-10));
    Check phase("equivalence_phase", tol(1e-10));
    for (double a : alphas) {
      const AlphaState state(a, opt.omega, constants);
      const GaussianForm fa = gaussian_form(state);
      const GaussianForm fb = gaussian_form(to_bogoliubov(state));
      const double sigma = std::sqrt(fa.sigma_sq);
      const bool has_thermal = a > 0.0;
      GaussianForm ft{};
      if (has_thermal) {
        ft = gaussian_form(ThermalSpec(
            temperature_from_alpha(state, opt.omega), opt.omega, constants));
      }
      for (double q : linspace(-8.0 * sigma, 8.0 * sigma, 1000)) {
        const double ma = std::abs(fa.amplitude(q));
        const double ia = std::abs(fa.exponent(q).imag());
        mod.record(ma - std::abs(fb.amplitude(q)));
        phase.record(ia - std::abs(fb.exponent(q).imag()));
        if (has_thermal) {
          mod.record(ma - std::abs(ft.amplitude(q)));
          phase.record(ia - std::abs(ft.exponent(q).imag()));
        }
      }
    }
    out.push_back(std::move(mod).finish());
    out.push_back(std::move(phase).finish());
  }

  // Parameter-map roundtrips and the thermal identification.
  {
    Check rt_tau("roundtrip_alpha_tau", tol(1e-14));
    for (double a : alphas) {
      rt_tau.record(alpha_from_tau(tau_from_alpha(a)) - a);
    }
    out.push_back(std::move(rt_tau).finish());

    Check rt_temp("roundtrip_temperature", tol(1e-12));
    Check thermal("thermal_consistency", tol(1e-12));
    for (double T : temperatures) {
      const ThermalSpec spec(T, opt.omega, constants);
      const AlphaState state = to_alpha_state(spec);
      rt_temp.record(
          rel_error(temperature_from_alpha(state, opt.omega), T));
      const auto [tvq, tvp] = thermal_variances(spec);
      thermal.record(rel_error(tvq, variance_q(state)));
      thermal.record(rel_error(tvp, variance_p(state)));
      const double energy = 0.5 * tvp + 0.5 * opt.omega * opt.omega * tvq;
      thermal.record(rel_error(energy, planck_energy(spec)));
    }
    out.push_back(std::move(rt_temp).finish());
    out.push_back(std::move(thermal).finish());
  }

  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace ccs::verify
