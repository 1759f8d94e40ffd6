#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace threshold_spectra {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input. `position()` is 1-based, 0 when not tied to a
/// character of the input text.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what, std::size_t position = 0)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The eigensolver hit its sweep cap. Carries the off-diagonal norm reached.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace threshold_spectra
