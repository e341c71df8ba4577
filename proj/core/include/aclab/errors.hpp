#pragma once

#include <stdexcept>
#include <string>

namespace aclab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state vector with no nonzero amplitude.
class ZeroStateError : public Error {
 public:
  using Error::Error;
};

/// An index (order t, multipole rank, ladder step) outside its valid range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Root finding, linear solves or iterative refinement failed to meet tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// The SLOCC class has no 1-anticoherent member (some Majorana multiplicity >= N/2).
class NoRepresentativeError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameters for an LP shape or a named state family.
class BadShapeError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or command-line value.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The four anticoherence characterizations disagree on a state.
class DiagnosticError : public Error {
 public:
  using Error::Error;
};

}  // namespace aclab
