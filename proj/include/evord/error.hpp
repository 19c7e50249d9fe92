#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evord {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// Requested combination of parameters is outside what an operation covers.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Two events have equal relativized time for some observer, i.e. the
/// observer velocity lies on a separating hyperplane.
class DegenerateOrdering : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace evord
