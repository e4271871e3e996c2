#pragma once

#include <stdexcept>
#include <string>

namespace pldiv {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data violates a precondition (non-finite coordinates, zero-norm
// rows under cosine distance, empty clouds, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// An algorithm parameter is out of range (gamma, tau, epsilon, grid sizes).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A precomputed matrix failed validation; the message names the first
// offending index pair.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A graph-structural precondition failed (e.g. disconnected input).
class StructuralError : public Error {
 public:
  StructuralError(const std::string& msg, int component_count)
      : Error(msg), component_count_(component_count) {}
  int component_count() const { return component_count_; }

 private:
  int component_count_;
};

// Numerical failure: eigensolver breakdown, ill-conditioned linear solve,
// non-convergent scale search.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Malformed input file; the message carries the line number.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pldiv
