#ifndef RESLIFT_ERRORS_HPP
#define RESLIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reslift {

// Base class for everything the engine throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated precondition or unusable input (zero denominator, ring mismatch,
// shape mismatch, improper ideal, ...).
struct DomainError : Error {
  using Error::Error;
};

// A mathematical invariant the implementation guarantees failed to hold;
// indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

// Input text rejected; carries 1-based line/column of the offending token.
struct ParseError : Error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
        line(line_), col(col_) {}
};

// lift_through: some column of the right-hand side is not in the column
// module of the matrix being lifted through.  `column` is 0-based.
struct LiftError : Error {
  int column;
  LiftError(const std::string& msg, int column_) : Error(msg), column(column_) {}
};

// minimalize: an entry is a unit in the local ring at the origin but not a
// constant, so the trivial summand cannot be split off polynomially.
struct MinimalizeError : Error {
  using Error::Error;
};

}  // namespace reslift

#endif
