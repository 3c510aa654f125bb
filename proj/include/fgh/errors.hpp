#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace fgh {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// predecessor() on zero or a limit.
struct NotASuccessor : Error {
  using Error::Error;
};

// fund_seq() on zero or a successor.
struct NotALimit : Error {
  using Error::Error;
};

// to_nat() on an ordinal >= w.
struct NotFinite : Error {
  using Error::Error;
};

// epsilon_0 fed to an operation defined only below it (omega_pow, mc, ...).
struct ArgumentTooLarge : Error {
  using Error::Error;
};

// omega_tower / fund_seq at epsilon_0 beyond the configured tower depth, or
// the recursive evaluator beyond its depth limit.
struct DepthExceeded : Error {
  using Error::Error;
};

// A Derived base function evaluated past its prefix under GuardPolicy::Fail.
// `step` is filled in when the failure happens inside a derivation.
struct OutOfDomain : Error {
  using Error::Error;
  std::optional<std::uint64_t> step;
};

// Register magnitude guard tripped (see Budget::max_register_digits).
struct RegisterOverflow : Error {
  using Error::Error;
  std::optional<std::uint64_t> step;
};

// Malformed descending sequence; `index` is the first offending entry.
struct ValidationError : Error {
  ValidationError(std::size_t index, const std::string& reason)
      : Error("entry " + std::to_string(index) + ": " + reason), index(index) {}
  std::size_t index;
};

// Syntax error in the ordinal text notation; `position` is a byte offset into
// the input, pointing inside it or one past the end.
struct ParseError : Error {
  ParseError(std::size_t position, const std::string& message)
      : Error(message + " (at offset " + std::to_string(position) + ")"),
        position(position),
        message(message) {}
  std::size_t position;
  std::string message;
};

}  // namespace fgh
