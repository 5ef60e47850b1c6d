// Error types shared across the library. Everything mathematical that can be
// diagnosed (bad field mix, bad dimensions, failed preconditions) throws one
// of these; plain logic errors in our own code use assert.
#pragma once

#include <stdexcept>
#include <string>

namespace lsc {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct FieldMismatchError : Error {
  explicit FieldMismatchError(const std::string& what) : Error(what) {}
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& what) : Error(what) {}
};

struct ParameterError : Error {
  explicit ParameterError(const std::string& what) : Error(what) {}
};

// algebra-level diagnoses
struct OrientationConflictError : Error {
  explicit OrientationConflictError(const std::string& what) : Error(what) {}
};

struct ClosureError : Error {
  explicit ClosureError(const std::string& what) : Error(what) {}
};

struct DiagonalityError : Error {
  explicit DiagonalityError(const std::string& what) : Error(what) {}
};

struct DomainError : Error {  // operation applied outside its mathematical domain
  explicit DomainError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace lsc
