#pragma once

#include <stdexcept>
#include <string>

namespace recolour {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a call that violates a documented precondition.
/// The CLI maps these to exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A certificate, invariant or verification check failed.
/// The CLI maps these to exit code 2.
class CertificateError : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public UsageError {
 public:
  using UsageError::UsageError;
};
class AdjacentPairError : public UsageError {
 public:
  using UsageError::UsageError;
};
class BadSeedColour : public UsageError {
 public:
  using UsageError::UsageError;
};
class InvalidMove : public UsageError {
 public:
  using UsageError::UsageError;
};
class PaletteTooSmall : public UsageError {
 public:
  using UsageError::UsageError;
};
class TooLarge : public UsageError {
 public:
  using UsageError::UsageError;
};
class UnknownFamily : public UsageError {
 public:
  using UsageError::UsageError;
};

class ParseError : public UsageError {
 public:
  ParseError(int line, const std::string& what)
      : UsageError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class StaleFromColour : public CertificateError {
 public:
  using CertificateError::CertificateError;
};
class ImproperResult : public CertificateError {
 public:
  using CertificateError::CertificateError;
};
class EndpointMismatch : public CertificateError {
 public:
  using CertificateError::CertificateError;
};
class WidthExceeded : public CertificateError {
 public:
  using CertificateError::CertificateError;
};
class NotDegenerateEnough : public CertificateError {
 public:
  using CertificateError::CertificateError;
};
class KempeExhausted : public CertificateError {
 public:
  using CertificateError::CertificateError;
};
class NoFreeColour : public CertificateError {
 public:
  using CertificateError::CertificateError;
};
class SearchExhausted : public CertificateError {
 public:
  using CertificateError::CertificateError;
};
class HardCapExceeded : public CertificateError {
 public:
  using CertificateError::CertificateError;
};
class InternalError : public CertificateError {
 public:
  using CertificateError::CertificateError;
};

}  // namespace recolour
