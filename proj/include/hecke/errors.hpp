#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input rejected before any computation (bad rank, non-minuscule mu, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Two scalars or a scalar and a parameter live in incompatible rings.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

// An intermediate result outgrew the configured support bound.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// An internal identity that must hold failed; indicates corrupted data or a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace hecke
