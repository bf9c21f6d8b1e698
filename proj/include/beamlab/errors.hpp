#pragma once

#include <stdexcept>
#include <string>

namespace beamlab {

/// Invalid parameters or configuration (maps to CLI exit code 2).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical guard tripped: aliasing, inadequate sampling, lost Hermiticity
/// (maps to CLI exit code 3).
class NumericalGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ParameterError(what);
}

}  // namespace beamlab
