#pragma once

#include <stdexcept>
#include <string>

namespace chaincode {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad user-supplied parameters, descriptors or files.  CLI exit code 2.
struct InvalidInput : Error {
  using Error::Error;
};

struct NotPrime : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct EvenPrimeUnsupported : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NotIrreducible : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NotCoprimeToP : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct InvalidDescriptor : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct InvalidParams : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct DegreeOverflow : InvalidInput {
  using InvalidInput::InvalidInput;
};

/// Arithmetic misuse detected at runtime.
struct DivisionByZero : Error {
  using Error::Error;
};
struct ZeroInput : Error {
  using Error::Error;
};
struct NotAUnit : Error {
  using Error::Error;
};

/// A brute-force oracle was asked to run beyond its tractability guard.
/// CLI exit code 3.
struct TooLarge : Error {
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace chaincode
