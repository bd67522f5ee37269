#pragma once

#include <stdexcept>
#include <string>

namespace circwl {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched group orders, non-coprime factorizations, malformed structure.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A computed object violates an axiom it must satisfy.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// No classification case matched. Treated as a bug signal by callers.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Hard size guards (brute-force automorphisms, canonical labeling).
class SizeError : public Error {
 public:
  using Error::Error;
};

// Family parameter constraints.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace circwl
