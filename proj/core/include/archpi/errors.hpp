#pragma once

#include <stdexcept>

namespace archpi {

// Root of every failure raised by the library. The CLI maps the three
// families below onto distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid user input: malformed strings, out-of-domain parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

// Arithmetic could not certify a result at the available precision.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroInterval : public PrecisionError {
 public:
  using PrecisionError::PrecisionError;
};

class NegativeRadicand : public PrecisionError {
 public:
  using PrecisionError::PrecisionError;
};

class PrecisionExhausted : public PrecisionError {
 public:
  using PrecisionError::PrecisionError;
};

class ResourceLimit : public PrecisionError {
 public:
  using PrecisionError::PrecisionError;
};

class UnsupportedSideCount : public InputError {
 public:
  using InputError::InputError;
};

class MalformedDecimal : public InputError {
 public:
  using InputError::InputError;
};

class NonPositiveValue : public InputError {
 public:
  using InputError::InputError;
};

class UnsupportedSeriesName : public InputError {
 public:
  using InputError::InputError;
};

class InvalidTermCount : public InputError {
 public:
  using InputError::InputError;
};

class MalformedRadical : public InputError {
 public:
  using InputError::InputError;
};

// No continued-fraction convergent under the denominator cap could be
// certified on the required side of the polygon enclosure.
class NoValidBound : public Error {
 public:
  using Error::Error;
};

}  // namespace archpi
