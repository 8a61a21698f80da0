#pragma once

#include <stdexcept>
#include <string>

namespace tverberg {

// Base of all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Shape mismatch (non-square matrix, vector length, ...).
class DimensionError : public Error {
public:
  using Error::Error;
};

// Caller broke a documented precondition (improper partition, matrices
// differing in more than one column, malformed instance, ...).
class ContractError : public Error {
public:
  using Error::Error;
};

// An exact computation hit a situation that a-general position rules out:
// tied event times, a vanishing system determinant at an event, an event
// exactly at the end of a stage. The solver reacts by re-perturbing.
class DegeneracyError : public Error {
public:
  using Error::Error;
};

// Enumeration guard exceeded.
class SizeError : public Error {
public:
  using Error::Error;
};

// Initial-configuration construction could not be certified.
class ConfigError : public Error {
public:
  using Error::Error;
};

// Malformed input text.
class ParseError : public Error {
public:
  using Error::Error;
};

// Valid request that this build does not serve (e.g. SVG for d != 2).
class UnsupportedError : public Error {
public:
  using Error::Error;
};

// A state the algorithm's invariants rule out. Indicates a bug, not bad input.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace tverberg
