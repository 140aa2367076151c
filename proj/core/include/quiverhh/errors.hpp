#ifndef QUIVERHH_ERRORS_HPP_
#define QUIVERHH_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace quiverhh {

// Base class of every error thrown by the engine.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed DSL input.  Positions are 1-based.
struct SyntaxError : Error {
  SyntaxError(std::size_t line, std::size_t col, const std::string& what)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) +
              ": " + what),
        line(line),
        col(col) {}
  std::size_t line;
  std::size_t col;
};

// Well-formed input that violates a semantic rule (unknown label,
// non-composable path, relation of length < 2, ...).
struct SemanticError : Error {
  using Error::Error;
};

// Scalars from different ground fields were mixed in one expression.
struct FieldMismatch : Error {
  using Error::Error;
};

// Groebner completion reached max_degree without a finiteness certificate.
struct NotFiniteDimensional : Error {
  NotFiniteDimensional(const std::string& what, std::vector<std::string> live)
      : Error(what), live_paths(std::move(live)) {}
  std::vector<std::string> live_paths;  // irreducible paths at the last level
};

// A reduction was requested beyond the completed degree of a truncated basis.
struct DegreeOverflow : Error {
  using Error::Error;
};

// The two independent dimension routes disagree; signals a Groebner bug.
struct OracleMismatch : Error {
  using Error::Error;
};

// A structural invariant that should hold for sane inputs failed.
struct InvariantViolation : Error {
  using Error::Error;
};

struct NotACycle : Error {
  using Error::Error;
};

// A reduction trace mentions a generator outside the expected system.
struct CertificateShapeError : Error {
  using Error::Error;
};

}  // namespace quiverhh

#endif  // QUIVERHH_ERRORS_HPP_
