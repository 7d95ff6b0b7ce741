#pragma once

#include <stdexcept>
#include <string>

namespace fia {

/// Root of all library errors. Anything derived from Error (except ParseError
/// and IoError) is a domain error: the inputs were well-formed but the
/// requested operation is not defined on them.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (JSON, scalar syntax, flag values).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failure while reading or writing.
class IoError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different field configurations (e.g. Q vs Z/p, or two
/// different moduli).
class MixedFields : public Error {
 public:
  using Error::Error;
};

class CycleDetected : public Error {
 public:
  using Error::Error;
};

class UnknownElement : public Error {
 public:
  using Error::Error;
};

class DuplicateElement : public Error {
 public:
  using Error::Error;
};

class NotComparable : public Error {
 public:
  using Error::Error;
};

class SizeTooLarge : public Error {
 public:
  using Error::Error;
};

class PosetMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Inversion was requested for a series with a zero diagonal entry; carries
/// the offending element id.
class NotInvertible : public Error {
 public:
  NotInvertible(const std::string& message, std::string element)
      : Error(message), element_(std::move(element)) {}
  const std::string& element() const { return element_; }

 private:
  std::string element_;
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

class NotAWitness : public Error {
 public:
  using Error::Error;
};

class NotAComponent : public Error {
 public:
  using Error::Error;
};

class InvalidWitness : public Error {
 public:
  using Error::Error;
};

class NotPrimitiveImage : public Error {
 public:
  using Error::Error;
};

class NotOrderPreserving : public Error {
 public:
  using Error::Error;
};

}  // namespace fia
