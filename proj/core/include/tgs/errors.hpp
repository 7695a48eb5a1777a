#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace tgs {

/// Malformed input: bad shapes, out-of-range indices, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// JSON text that could not be parsed; carries the byte offset of the failure.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured enumeration or search cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::string progress = {})
      : std::runtime_error(what), progress_(std::move(progress)) {}
  const std::string& progress() const noexcept { return progress_; }

 private:
  std::string progress_;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed (e.g. a quotient depended on representatives).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tgs
