#pragma once

#include <stdexcept>
#include <string>

namespace hyperforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the region where the requested function is defined or
// where this implementation can evaluate it.
class DomainError : public Error {
 public:
  using Error::Error;
};

class TermCapExceeded : public Error {
 public:
  using Error::Error;
};

class NonConvergent : public Error {
 public:
  using Error::Error;
};

class NearZeroOnTorus : public Error {
 public:
  using Error::Error;
};

class DivergesError : public Error {
 public:
  using Error::Error;
};

class FractionalLeadingPower : public Error {
 public:
  using Error::Error;
};

class InconsistentFunctionalEquation : public Error {
 public:
  using Error::Error;
};

class UnknownId : public Error {
 public:
  using Error::Error;
};

class CoefficientOverflow : public Error {
 public:
  using Error::Error;
};

class CacheError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperforge
