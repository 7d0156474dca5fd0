#pragma once

#include <stdexcept>
#include <string>

namespace ncx {

/// Base class for every error raised by the kernel.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// Operands live over different rings.
class RingMismatch : public Error {
public:
  using Error::Error;
};

/// Checked 64-bit integer arithmetic left the representable range.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// A documented precondition was violated (index range, period, axiom).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Malformed or schema-violating serialized input.
class FormatError : public Error {
public:
  using Error::Error;
};

} // namespace ncx
