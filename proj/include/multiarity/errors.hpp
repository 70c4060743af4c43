#ifndef MULTIARITY_ERRORS_HPP
#define MULTIARITY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace multiarity {

// Shape errors: malformed inputs (mismatched domains, unknown objects,
// bad context lengths). Mapped to CLI exit code 2.
struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

// A cocone handed to mediating_map whose legs do not commute with the
// diagram. A kind of shape error.
struct NotACoconeError : ShapeError {
  explicit NotACoconeError(const std::string& what) : ShapeError(what) {}
};

// Capacity errors: a size guard on generated structures was exceeded.
// Mapped to CLI exit code 3.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Coverage errors: an operation needed a table entry that is not present
// (truncation gap). Mapped to CLI exit code 3.
struct CoverageError : std::runtime_error {
  explicit CoverageError(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency errors: a theorem the implementation relies on
// (e.g. closure of central terms under substitution) failed on concrete
// data, which signals a bug rather than bad input.
struct InternalConsistencyError : std::runtime_error {
  explicit InternalConsistencyError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace multiarity

#endif
