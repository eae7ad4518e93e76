#pragma once

#include <stdexcept>
#include <string>

namespace uncsmear {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A model or kernel parameter lies outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An energy lies outside the model's bound-state range.
class EnergyDomainError : public Error {
 public:
  using Error::Error;
};

/// A position lies outside the region where the quantity is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a point where the density diverges.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition (grid extent, window size, sample count) failed.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two densities sampled on different grids were combined.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace uncsmear
