#pragma once

#include <stdexcept>
#include <string>

namespace trec {

// Requested coefficients lie outside the guaranteed window of a series.
// Callers widen the window and retry instead of fabricating zeros.
struct InsufficientPrecision : std::runtime_error {
  explicit InsufficientPrecision(const std::string& what)
      : std::runtime_error(what) {}
};

// An exact operation would need a root (or a ramification location) that does
// not live in the active coefficient field.
struct FieldExtensionRequired : std::runtime_error {
  explicit FieldExtensionRequired(const std::string& what)
      : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Leading-term query on a series all of whose known coefficients vanish.
struct PossiblyZero : std::runtime_error {
  explicit PossiblyZero(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidCurve : std::runtime_error {
  explicit InvalidCurve(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedCurve : std::runtime_error {
  explicit UnsupportedCurve(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace trec
