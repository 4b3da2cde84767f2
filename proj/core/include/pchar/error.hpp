#pragma once

#include <stdexcept>
#include <string>

namespace pchar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed presentation text or relation data.
class PresentationError : public Error {
 public:
  using Error::Error;
};

/// The presentation fails one of the standard overlap tests.
class InconsistentPresentation : public Error {
 public:
  using Error::Error;
};

/// A brute-force routine was asked to work on a group above its bound.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

/// A coset or orbit enumeration exceeded its configured bound.
class IndexOverflowError : public Error {
 public:
  using Error::Error;
};

/// Character assignment violates a relation of the domain.
class NotAHomomorphism : public Error {
 public:
  using Error::Error;
};

class UnsupportedOvergroup : public Error {
 public:
  using Error::Error;
};

/// A constructor hypothesis (prime, congruence, ...) does not hold.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// No decomposition tier covers the input.
class NoStrategyError : public Error {
 public:
  using Error::Error;
};

class CertificationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pchar
