#pragma once

#include <stdexcept>
#include <string>

namespace zefc {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input document could not be parsed.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Parsed input or a call argument violates a documented precondition.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// An enumeration would exceed the configured state cap.
class ResourceCapError : public Error {
 public:
  explicit ResourceCapError(const std::string& what) : Error(what) {}
};

// A library-internal consistency check failed. Indicates a bug.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

namespace detail {
inline void internal_check(bool ok, const char* what) {
  if (!ok) throw InternalError(what);
}
}  // namespace detail

}  // namespace zefc
