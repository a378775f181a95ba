#pragma once

#include <stdexcept>
#include <string>

namespace mg {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Objects that do not fit together: wrong ring, wrong length, bad shape.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A Groebner computation exceeded its configured basis or support cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Two independent criteria that must agree did not. Indicates an engine bug
/// or a non-generic random draw.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace mg
