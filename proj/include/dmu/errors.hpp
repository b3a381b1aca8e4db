#pragma once

#include <stdexcept>
#include <string>

namespace dmu {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A matrix handed to a Hermitian-only operation was not Hermitian.
struct NotHermitianError : Error {
  using Error::Error;
};

// Model parameters outside the valid domain (J = 0, T <= 0, D < 0, ...).
struct ParamDomainError : Error {
  using Error::Error;
};

// A density matrix violating Hermiticity, unit trace, or positivity.
struct InvalidStateError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

// Observables must have two distinct eigenvalues.
struct DegenerateObservableError : Error {
  using Error::Error;
};

// Collapse check: the two curves share too few interpolation points.
struct InsufficientOverlapError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace dmu
