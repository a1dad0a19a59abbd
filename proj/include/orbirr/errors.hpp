#pragma once

#include <stdexcept>
#include <string>

namespace orbirr {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user-supplied data: malformed text, schema violations, out-of-range arguments.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size bound (group order, conductor) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Class functions living on different groups were combined.
class GroupMismatch : public Error {
 public:
  using Error::Error;
};

/// An exact identity that must hold failed. Signals a bug, never a valid result.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace orbirr
