#pragma once

#include <stdexcept>
#include <string>

namespace lacunae {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation needs more λ-terms than the series carries.
class TruncationUnderflow : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// A lower hypergeometric parameter reached a non-positive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagreed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Invalid combination of command-line style parameters.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace lacunae
