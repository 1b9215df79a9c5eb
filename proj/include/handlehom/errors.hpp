#pragma once

#include <stdexcept>
#include <string>

namespace hh {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Positions are 1-based.
struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : Error("line " + std::to_string(line_) + ", col " +
              std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

/// Well-formed input that violates a semantic rule (labels, shapes, ...).
struct SemanticError : Error {
  using Error::Error;
};

struct UnknownLabelError : SemanticError {
  using SemanticError::SemanticError;
};

struct DuplicateLabelError : SemanticError {
  using SemanticError::SemanticError;
};

struct SameHandleError : SemanticError {
  using SemanticError::SemanticError;
};

struct ShapeError : SemanticError {
  using SemanticError::SemanticError;
};

/// An operation whose mathematical preconditions exclude the given input
/// (e.g. integral duality on non-oriented data).
struct NotApplicableError : SemanticError {
  using SemanticError::SemanticError;
};

struct IndexOutOfRangeError : Error {
  using Error::Error;
};

/// Mathematically inconsistent data or a violated invariant.
struct MathError : Error {
  using Error::Error;
};

/// Some boundary product d_k * d_{k+1} is nonzero; reports the first
/// offending pair of generators.
struct InconsistentBoundaryError : MathError {
  int degree;  // the k of d_k * d_{k+1}
  std::string row_label;
  std::string col_label;
  InconsistentBoundaryError(int k, const std::string& row,
                            const std::string& col)
      : MathError("boundary composition d_" + std::to_string(k) + " * d_" +
                  std::to_string(k + 1) + " is nonzero at (" + row + ", " +
                  col + ")"),
        degree(k),
        row_label(row),
        col_label(col) {}
};

/// Cancellation attempted at an intersection number other than +1 or -1.
struct PivotNotUnitError : MathError {
  using MathError::MathError;
};

}  // namespace hh
