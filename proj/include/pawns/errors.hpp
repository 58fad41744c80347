#pragma once

#include <stdexcept>

namespace pawns {

// Base class for every error this library raises on bad input.
// Broken internal invariants throw std::logic_error instead.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text that does not parse as the expected format (JSON, ASCII grid, strip word).
struct ParseError : Error {
  using Error::Error;
};

// A cell outside the owning board's bounds.
struct CellOutOfRange : Error {
  using Error::Error;
};

// The same cell listed more than once.
struct DuplicateCell : Error {
  using Error::Error;
};

// Operation needs even side lengths (a board that splits into 2x2 blocks).
struct OddDimensions : Error {
  using Error::Error;
};

// Board is not an independent arrangement of maximum size.
struct NotMaximumIndependent : Error {
  using Error::Error;
};

// Strip word is not an entry of the strip matrix.
struct NotInMatrix : Error {
  using Error::Error;
};

// Argument violates a documented precondition (range, monotonicity, size).
struct InvalidArgument : Error {
  using Error::Error;
};

// Enumeration would produce more boards than the in-memory guard allows.
struct CountGuardExceeded : Error {
  using Error::Error;
};

}  // namespace pawns
