#pragma once

#include <stdexcept>
#include <string>

namespace egoarena {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated a precondition (out-of-range input, empty list, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An action is not legal in the current engine state, or the state is terminal.
class RuleViolation : public Error {
 public:
  using Error::Error;
};

// Malformed configuration or data file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A chat provider could not produce a reply after exhausting its retry policy.
class ProviderError : public Error {
 public:
  ProviderError(const std::string& what, int last_status)
      : Error(what), last_status_(last_status) {}
  int last_status() const { return last_status_; }

 private:
  int last_status_;
};

}  // namespace egoarena
