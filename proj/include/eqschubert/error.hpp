#pragma once

#include <stdexcept>
#include <string>

namespace eqschubert {

// Root of every library exception. Input problems derive from InputError so
// front ends can map them to a single exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidElement : public InputError {
 public:
  using InputError::InputError;
};

class UnsupportedType : public InputError {
 public:
  using InputError::InputError;
};

class NotARoot : public InputError {
 public:
  using InputError::InputError;
};

class RepNotMinimal : public InputError {
 public:
  using InputError::InputError;
};

class NonStandardLevi : public InputError {
 public:
  using InputError::InputError;
};

// Arithmetic failures. In this library they always mean a class violated the
// GKM conditions or a convention mismatch upstream.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class NotInSpan : public Error {
 public:
  using Error::Error;
};

class NonPolynomialResult : public Error {
 public:
  using Error::Error;
};

class NonIntegralResult : public Error {
 public:
  using Error::Error;
};

class CrossCheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace eqschubert
