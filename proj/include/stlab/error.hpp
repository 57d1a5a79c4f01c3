#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stlab {

enum class ErrorKind {
  InvalidArity,
  DegeneratePolytope,
  NotATriangulation,
  Incompatible,
  InvalidElement,
  DuplicateVertex,
  NotApplicable,
  ResourceExceeded,
  InternalConsistency,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArity: return "invalid-arity";
    case ErrorKind::DegeneratePolytope: return "degenerate-polytope";
    case ErrorKind::NotATriangulation: return "not-a-triangulation";
    case ErrorKind::Incompatible: return "incompatible";
    case ErrorKind::InvalidElement: return "invalid-element";
    case ErrorKind::DuplicateVertex: return "duplicate-vertex";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::ResourceExceeded: return "resource-exceeded";
    case ErrorKind::InternalConsistency: return "internal-consistency";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Thrown by enumeration drivers when an element or wall-clock cap is hit.
/// `partial_count` is the number of distinct elements discovered so far.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t partial_count)
      : Error(ErrorKind::ResourceExceeded, what), partial_count_(partial_count) {}

  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t partial_count_;
};

}  // namespace stlab
