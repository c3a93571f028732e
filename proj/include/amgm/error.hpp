#pragma once

#include <stdexcept>
#include <string>

namespace amgm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched or too-short input lengths.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Weights that are nonpositive, nonfinite, or do not sum to one.
class WeightError : public Error {
 public:
  using Error::Error;
};

/// A value outside the admissible range of an operation (negative data,
/// a point outside a function's domain, beta outside (0,1), p <= 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Inputs for which the requested quantity is undefined (zero norm,
/// all-zero data for a ratio, empty measure).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Invalid experiment configuration or malformed input file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace amgm
