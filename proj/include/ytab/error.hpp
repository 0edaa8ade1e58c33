#pragma once

#include <stdexcept>

namespace ytab {

/// Root of every exception thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: grid dimensions that disagree with the shape, non-finite
/// entries, tuples of the wrong length.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain where the operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A sampler or enumerator refused the request under its configured caps.
/// Never replaced by a silent fallback.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Invalid experiment configuration (CLI / config file).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace ytab
