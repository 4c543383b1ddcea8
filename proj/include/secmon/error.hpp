#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace secmon {

/// Base of every error raised by the library. The CLI maps subclasses to exit
/// codes, so new error kinds should derive from one of these.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (unknown label, arity, bad shape...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed or unparsable input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Table or Hilbert space exceeds the dense-representation caps.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

/// A protocol step cannot be applied to some ensemble branch.
class ProtocolError : public Error {
 public:
  ProtocolError(std::size_t step, std::size_t branch, const std::string& what)
      : Error("step " + std::to_string(step) + " (branch " +
              std::to_string(branch) + "): " + what),
        step_(step),
        branch_(branch) {}

  std::size_t step() const noexcept { return step_; }
  std::size_t branch() const noexcept { return branch_; }

 private:
  std::size_t step_;
  std::size_t branch_;
};

/// An identity that must hold by construction failed numerically.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace secmon
