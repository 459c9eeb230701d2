// Command-line front end: single-state reports, temperature sweeps, the
// verification suite and phase-plane plot data, as CSV or JSON.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccs/kernels.hpp"
#include "ccs/moments.hpp"
#include "ccs/oracle.hpp"
#include "ccs/states.hpp"
#include "ccs/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct GlobalConfig {
  double omega = 1.0;
  std::optional<double> gamma;  // defaults to omega
  double hbar = 1.0;
  double k_B = 1.0;
  std::string format = "csv";
  std::optional<double> tol;

  ccs::Constants constants() const { return {hbar, k_B}; }
  double effective_gamma() const { return gamma.value_or(omega); }

  // Every subcommand relates the parametrizations, which is only defined
  // along gamma = omega.
  void require_identified() const {
    if (gamma && *gamma != omega) {
      throw ccs::InvalidParameter(
          "cross-parametrization commands require gamma = omega");
    }
  }
};

// Fixed 17-significant-digit formatting keeps CSV output bit-stable and
// round-trippable across platforms.
std::string fmt17(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

using Row = std::vector<std::pair<std::string, double>>;

void emit_csv_table(const std::vector<std::string>& header,
                    const std::vector<Row>& rows) {
  std::string line;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) line += ',';
    line += header[i];
  }
  std::cout << line << '\n';
  for (const Row& row : rows) {
    line.clear();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += ',';
      line += fmt17(row[i].second);
    }
    std::cout << line << '\n';
  }
}

void emit_json_rows(const std::vector<Row>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Row& row : rows) {
    nlohmann::json obj;
    for (const auto& [key, value] : row) obj[key] = value;
    arr.push_back(std::move(obj));
  }
  std::cout << arr.dump(2) << '\n';
}

void emit_rows(const GlobalConfig& cfg, const std::vector<std::string>& header,
               const std::vector<Row>& rows) {
  if (cfg.format == "json") {
    emit_json_rows(rows);
  } else {
    emit_csv_table(header, rows);
  }
}

// ---------------------------------------------------------------- state --

int cmd_state(const GlobalConfig& cfg, std::optional<double> alpha,
              std::optional<double> tau, std::optional<double> temperature) {
  const int given = int(alpha.has_value()) + int(tau.has_value()) +
                    int(temperature.has_value());
  if (given != 1) {
    std::cerr << "error: provide exactly one of --alpha, --tau, "
                 "--temperature\n";
    return kExitUsage;
  }
  cfg.require_identified();
  const ccs::Constants constants = cfg.constants();

  double a = 0.0;
  if (alpha) {
    a = *alpha;
  } else if (tau) {
    a = ccs::alpha_from_tau(*tau);
  } else {
    a = ccs::alpha_from_temperature(
        ccs::ThermalSpec(*temperature, cfg.omega, constants));
  }
  const ccs::AlphaState state(a, cfg.effective_gamma(), constants);
  const ccs::MomentSet m = ccs::moment_set(state);
  const ccs::UncertaintyReport r = ccs::sur_report(state);
  const double T =
      a == 0.0 ? 0.0 : ccs::temperature_from_alpha(state, cfg.omega);

  const Row row{
      {"alpha", a},
      {"tau", ccs::tau_from_alpha(a)},
      {"temperature", T},
      {"omega", cfg.omega},
      {"gamma", cfg.effective_gamma()},
      {"hbar", cfg.hbar},
      {"k_B", cfg.k_B},
      {"var_q", m.var_q},
      {"var_p", m.var_p},
      {"cov_pq", m.cov_pq},
      {"correlator", m.correlator_mag},
      {"uncertainty_product", m.uncertainty_product},
      {"sur_lhs", r.sur_lhs},
      {"sur_rhs", r.sur_rhs},
      {"saturation_defect", r.saturation_defect},
      {"heisenberg_bound", r.heisenberg_bound},
      {"effective_action", r.effective_action},
  };
  if (cfg.format == "json") {
    nlohmann::json obj;
    for (const auto& [key, value] : row) obj[key] = value;
    std::cout << obj.dump(2) << '\n';
  } else {
    for (const auto& [key, value] : row) {
      std::cout << key << ',' << fmt17(value) << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- sweep --

Row sweep_row(const GlobalConfig& cfg, double T) {
  const ccs::Constants constants = cfg.constants();
  const ccs::ThermalSpec spec(T, cfg.omega, constants);
  const double a = ccs::alpha_from_temperature(spec);
  const ccs::AlphaState state(a, cfg.omega, constants);
  const ccs::MomentSet m = ccs::moment_set(state);
  const ccs::UncertaintyReport r = ccs::sur_report(state);
  return {
      {"T", T},
      {"alpha", a},
      {"tau", ccs::tau_from_alpha(a)},
      {"var_q", m.var_q},
      {"var_p", m.var_p},
      {"cov_pq", m.cov_pq},
      {"correlator", m.correlator_mag},
      {"sur_lhs", r.sur_lhs},
      {"sur_rhs", r.sur_rhs},
      {"planck_energy", ccs::planck_energy(spec)},
      {"effective_action", r.effective_action},
      {"square_area", ccs::phase_plane_square(spec).area},
  };
}

const std::vector<std::string> kSweepHeader{
    "T",       "alpha",   "tau",           "var_q",
    "var_p",   "cov_pq",  "correlator",    "sur_lhs",
    "sur_rhs", "planck_energy", "effective_action", "square_area"};

int cmd_sweep(const GlobalConfig& cfg, double t_min, double t_max, int steps) {
  if (!(t_min >= 0.0) || !(t_min < t_max) || steps < 2) {
    std::cerr << "error: sweep requires 0 <= tmin < tmax and steps >= 2\n";
    return kExitUsage;
  }
  cfg.require_identified();
  std::vector<Row> rows(static_cast<std::size_t>(steps));
  // Rows are independent; assembly below is ordered regardless of schedule.
  ccs::kernels::for_each_index(
      steps,
      [&](std::int64_t i) {
        const double T = t_min + (t_max - t_min) * static_cast<double>(i) /
                                     static_cast<double>(steps - 1);
        rows[static_cast<std::size_t>(i)] = sweep_row(cfg, T);
      },
      ccs::kernels::Execution::openmp);
  emit_rows(cfg, kSweepHeader, rows);
  return kExitOk;
}

// --------------------------------------------------------------- verify --

int cmd_verify(const GlobalConfig& cfg, double alpha_max) {
  cfg.require_identified();
  ccs::verify::VerifyOptions options;
  options.alpha_max = alpha_max;
  options.omega = cfg.omega;
  options.hbar = cfg.hbar;
  options.k_B = cfg.k_B;
  options.tolerance_override = cfg.tol;

  const std::vector<ccs::verify::CheckResult> results =
      ccs::verify::run_all(options);
  for (const auto& r : results) {
    std::printf("%-26s worst %.3e  tol %.1e  [%s]\n", r.name.c_str(),
                r.worst_error, r.tolerance, r.pass ? "PASS" : "FAIL");
  }
  const bool ok = ccs::verify::all_passed(results);
  std::printf("%zu checks, %s\n", results.size(), ok ? "all passed" : "FAILED");
  return ok ? kExitOk : kExitVerifyFailed;
}

// ------------------------------------------------------------ plot-data --

int cmd_plot_data(const GlobalConfig& cfg, const std::vector<double>& temps) {
  cfg.require_identified();
  const ccs::Constants constants = cfg.constants();
  std::vector<Row> rows;
  rows.reserve(temps.size());
  for (double T : temps) {
    const ccs::PhaseSquare sq =
        ccs::phase_plane_square(ccs::ThermalSpec(T, cfg.omega, constants));
    const double h = 0.5 * sq.side_Q;
    rows.push_back({
        {"T", T},
        {"side", sq.side_Q},
        {"area", sq.area},
        {"q1", h},
        {"p1", h},
        {"q2", -h},
        {"p2", h},
        {"q3", -h},
        {"p3", -h},
        {"q4", h},
        {"p4", -h},
    });
  }
  emit_rows(cfg,
            {"T", "side", "area", "q1", "p1", "q2", "p2", "q3", "p3", "q4",
             "p4"},
            rows);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"correlated coherent state toolkit"};
  app.set_config("--config", "", "key=value configuration file");
  app.fallthrough();
  app.require_subcommand(1);

  GlobalConfig cfg;
  app.add_option("--omega", cfg.omega, "oscillator frequency")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--gamma", cfg.gamma,
                 "stiffness of the phase parametrization (defaults to omega)")
      ->check(CLI::PositiveNumber);
  app.add_option("--hbar", cfg.hbar, "Planck constant")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--kb", cfg.k_B, "Boltzmann constant")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--tol", cfg.tol,
                 "override every verification tolerance (verify)");

  auto* state_cmd = app.add_subcommand(
      "state", "report all observables of a single state");
  std::optional<double> opt_alpha, opt_tau, opt_temperature;
  state_cmd->add_option("--alpha", opt_alpha, "phase angle in [0, pi/2)");
  state_cmd->add_option("--tau", opt_tau, "squeezing parameter >= 0");
  state_cmd->add_option("--temperature", opt_temperature,
                        "equilibrium temperature >= 0");

  auto* sweep_cmd =
      app.add_subcommand("sweep", "tabulate observables over a temperature range");
  double t_min = 0.0, t_max = 1.0;
  int steps = 0;
  sweep_cmd->add_option("--tmin", t_min, "lowest temperature")->required();
  sweep_cmd->add_option("--tmax", t_max, "highest temperature")->required();
  sweep_cmd->add_option("--steps", steps, "number of rows")->required();

  auto* verify_cmd = app.add_subcommand(
      "verify", "run every oracle check and report worst-case errors");
  double alpha_max = 1.45;
  verify_cmd->add_option("--alpha-max", alpha_max, "upper end of the alpha grid")
      ->capture_default_str();

  auto* plot_cmd = app.add_subcommand(
      "plot-data", "emit uncertainty-square corner data per temperature");
  std::vector<double> temperatures;
  plot_cmd->add_option("temperatures", temperatures, "temperatures >= 0")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (state_cmd->parsed()) {
      return cmd_state(cfg, opt_alpha, opt_tau, opt_temperature);
    }
    if (sweep_cmd->parsed()) {
      return cmd_sweep(cfg, t_min, t_max, steps);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(cfg, alpha_max);
    }
    return cmd_plot_data(cfg, temperatures);
  } catch (const ccs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
