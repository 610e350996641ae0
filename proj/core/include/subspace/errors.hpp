#pragma once

#include <stdexcept>
#include <string>

namespace subspace {

// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Errors caused by invalid user-supplied parameters or specs. The CLI maps
// these to exit code 2, everything else under Error to exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

// -- core model -------------------------------------------------------------

// A domain type invariant was violated at construction.
class InvalidModel : public Error {
 public:
  using Error::Error;
};

// -- dataset-io -------------------------------------------------------------

class IoError : public Error {
 public:
  using Error::Error;
};

class MalformedArff : public Error {
 public:
  using Error::Error;
};

// ARFF attribute type outside the supported numeric subset.
class UnsupportedAttribute : public Error {
 public:
  using Error::Error;
};

// A "?" value in a numeric ARFF attribute.
class MissingValue : public Error {
 public:
  using Error::Error;
};

class MalformedCsv : public Error {
 public:
  using Error::Error;
};

class NonNumericCell : public Error {
 public:
  using Error::Error;
};

class RaggedRows : public Error {
 public:
  using Error::Error;
};

// Structural problem in a clustering file (tables pair or .clu).
class FormatError : public Error {
 public:
  using Error::Error;
};

class IdOutOfRange : public Error {
 public:
  using Error::Error;
};

// A cluster id present in one table of the pair but not the other.
class DanglingClusterId : public Error {
 public:
  using Error::Error;
};

// -- algorithms -------------------------------------------------------------

class InvalidParams : public UsageError {
 public:
  using UsageError::UsageError;
};

// Dataset is too small for the requested parameters (e.g. n < k).
class InsufficientData : public Error {
 public:
  using Error::Error;
};

// -- generator ----------------------------------------------------------------

class InvalidSpec : public UsageError {
 public:
  using UsageError::UsageError;
};

// -- evaluation ---------------------------------------------------------------

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Reference clustering has zero clusters but the measure needs one.
class EmptyReference : public Error {
 public:
  using Error::Error;
};

}  // namespace subspace
