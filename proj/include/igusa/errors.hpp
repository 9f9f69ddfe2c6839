#ifndef IGUSA_ERRORS_HPP
#define IGUSA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace igusa {

/// Syntax error in polynomial or config text; position is 0-based.
struct ParseError : std::runtime_error {
  size_t position;
  ParseError(size_t pos, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

/// An enumeration would exceed the configured work budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A required non-degeneracy certificate is absent or negative.
struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid geometric input (empty support, origin in support, zero cone...).
struct GeometryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace igusa

#endif
