#pragma once

#include <stdexcept>
#include <string>

namespace ccs {

// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A constructor argument violates a type invariant (non-finite input,
// angle outside [0, pi/2), non-positive stiffness, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// A parameter drives cosh/sec beyond the double-precision range.
class ParameterOverflow : public Error {
 public:
  using Error::Error;
};

// T = 0 requested from the thermal wavefunction; the exact cold vacuum
// is the alpha = 0 state, use that constructor instead.
class DegenerateTemperature : public Error {
 public:
  using Error::Error;
};

// alpha = 0 has no finite inverse temperature map (T = 0 exactly).
class ColdVacuumLimit : public Error {
 public:
  using Error::Error;
};

// Quadrature refinement exhausted without meeting the tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

// A coordinate grid cannot resolve the requested momentum content.
class GridTooCoarse : public Error {
 public:
  using Error::Error;
};

}  // namespace ccs
