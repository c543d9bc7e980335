#pragma once

#include <stdexcept>
#include <string>

namespace grundy {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument or violated precondition (arity mismatch, vertex out of
// range, dependent set where an independent one is required, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// The independent set lies outside the family a closed form covers.
class FamilyError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine was asked to run above its size threshold.
class ThresholdError : public Error {
 public:
  using Error::Error;
};

// The request is well formed but no solver covers it.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class IntractablePrimeError : public Error {
 public:
  IntractablePrimeError(const std::string& what, int node_size)
      : Error(what), node_size_(node_size) {}
  int node_size() const { return node_size_; }

 private:
  int node_size_;
};

// A result failed its own consistency check.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace grundy
