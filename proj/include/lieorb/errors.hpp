#pragma once

#include <stdexcept>
#include <string>

namespace lieorb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input: unsupported algebra, malformed config, wrong mode.
struct ConfigError : Error {
  using Error::Error;
};

// An argument lies outside the set an operation is defined on.
struct DomainError : Error {
  using Error::Error;
};

// A rank or cluster decision falls inside the ambiguous band.
struct DegeneracyError : Error {
  using Error::Error;
};

// Two independent computations that must agree do not.
struct InconsistencyError : Error {
  using Error::Error;
};

}  // namespace lieorb
