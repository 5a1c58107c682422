#pragma once

#include <stdexcept>
#include <string>

namespace oscsteer {

// Invalid physical parameters, quantum numbers, or option values.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// A computed quantity left its admissible range (cancellation, grid too
// coarse, a misread formula).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oscsteer
