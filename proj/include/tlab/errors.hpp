#ifndef TLAB_ERRORS_HPP
#define TLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// Malformed text input. `offset` is the byte offset of the first bad byte.
class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t offset)
      : Error(what + " (byte offset " + std::to_string(offset) + ")"),
        message_(what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  /// The description without the offset suffix.
  const std::string &message() const noexcept { return message_; }

private:
  std::string message_;
  std::size_t offset_;
};

/// A configured size or budget limit was exceeded.
class CapExceeded : public Error {
public:
  using Error::Error;
};

} // namespace tlab

#endif // TLAB_ERRORS_HPP
