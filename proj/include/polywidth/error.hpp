#pragma once

#include <stdexcept>
#include <string>

namespace polywidth {

enum class ErrorKind {
  Usage,         // malformed input (bad rational, wrong arity, ...)
  NonGeneric,    // some epsilon_I vanishes
  EmptySpace,    // a singleton is long, closing condition fails
  Precondition,  // operation called outside its hypotheses
  Capability,    // input too large for exhaustive enumeration
  Unbounded,     // polyhedron is not a polytope
  Geometry,      // degenerate / non-simple / non-smooth input to fan code
  Internal,      // broken invariant inside the library
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Usage: return "usage";
    case ErrorKind::NonGeneric: return "non-generic";
    case ErrorKind::EmptySpace: return "empty-space";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Capability: return "capability";
    case ErrorKind::Unbounded: return "unbounded";
    case ErrorKind::Geometry: return "geometry";
    case ErrorKind::Internal: return "internal";
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

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) throw Error(kind, what);
}

// Invariant check that survives NDEBUG.
inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::Internal, what);
}

}  // namespace polywidth
