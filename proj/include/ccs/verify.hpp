#pragma once

// The self-verification suite behind `ccs verify`: every closed form is
// checked against the quadrature / Fourier / finite-difference oracles over
// standard parameter grids, and the parameter maps are round-tripped.

#include <optional>
#include <string>
#include <vector>

#include "ccs/kernels.hpp"
#include "ccs/oracle.hpp"

namespace ccs::verify {

struct CheckResult {
  std::string name;
  double worst_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  double alpha_max = 1.45;
  double omega = 1.0;
  double hbar = 1.0;
  double k_B = 1.0;
  // Replaces every per-check tolerance when set.
  std::optional<double> tolerance_override;
  oracle::QuadratureConfig quad{};
  kernels::Execution exec = kernels::Execution::openmp;
};

std::vector<CheckResult> run_all(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace ccs::verify
