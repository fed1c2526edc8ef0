#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace hss {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input expected to be Hermitian deviates from its adjoint beyond tolerance.
struct NonHermitianInput : Error {
  NonHermitianInput(const std::string& what, double asym)
      : Error(what), asymmetry(asym) {}
  double asymmetry;
};

/// Iterative eigensolver did not reach the off-diagonal threshold within
/// its sweep budget.
struct ConvergenceFailure : Error {
  using Error::Error;
};

enum class StateViolation { Hermiticity, Trace, Positivity };

inline const char* to_string(StateViolation v) {
  switch (v) {
    case StateViolation::Hermiticity: return "hermiticity";
    case StateViolation::Trace: return "trace";
    case StateViolation::Positivity: return "positivity";
  }
  return "?";
}

namespace detail {
inline std::string compact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}
}  // namespace detail

/// A matrix failed density-matrix validation; carries which invariant broke
/// and by how much.
struct NotAState : Error {
  NotAState(StateViolation v, double mag)
      : Error(std::string("not a quantum state: ") + to_string(v) +
              " violated by " + detail::compact(mag)),
        violation(v),
        magnitude(mag) {}
  StateViolation violation;
  double magnitude;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

/// Derivative of a unit-trace family must be traceless.
struct NonTracelessInput : Error {
  NonTracelessInput(const std::string& what, double mag)
      : Error(what), trace_magnitude(mag) {}
  double trace_magnitude;
};

/// Adaptive quadrature exceeded its recursion depth cap.
struct SubdivisionLimit : Error {
  using Error::Error;
};

/// A Kraus-mixture weight went negative beyond tolerance: the rate
/// configuration left the physical family.
struct NotAProbability : Error {
  NotAProbability(const std::string& what, double v) : Error(what), value(v) {}
  double value;
};

/// A decay amplitude exceeded unit magnitude: unphysical parameter regime.
struct NonContractiveAmplitude : Error {
  NonContractiveAmplitude(const std::string& what, double mag)
      : Error(what), magnitude(mag) {}
  double magnitude;
};

/// Two series expected on the same time grid are not.
struct GridMismatch : Error {
  using Error::Error;
};

struct UnknownParameter : Error {
  UnknownParameter(const std::string& k)
      : Error("unknown parameter: " + k), key(k) {}
  std::string key;
};

/// CLI configuration error (exit status 2).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace hss
