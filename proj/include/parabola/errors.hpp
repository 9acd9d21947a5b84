#pragma once

#include <stdexcept>
#include <string>

namespace parabola {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotOddPrime : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ZeroLeadingCoefficient : public Error {
 public:
  using Error::Error;
};

class BetaNonzero : public Error {
 public:
  using Error::Error;
};

class ZeroSlope : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// A search was asked to run above its configured prime cap.
class TooLarge : public Error {
 public:
  using Error::Error;
};

class NotAParabolaSet : public Error {
 public:
  using Error::Error;
};

/// A bound guaranteed by a theorem failed; always an implementation bug.
class BoundViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace parabola
