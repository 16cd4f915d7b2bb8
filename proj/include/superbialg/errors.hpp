#pragma once

#include <stdexcept>
#include <string>

namespace superbialg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArithmeticError : Error {
    using Error::Error;
};

/// Operands live over different graded bases.
struct BasisMismatch : Error {
    using Error::Error;
};

/// Malformed external input (JSON, element expressions, numbers).
struct ParseError : Error {
    using Error::Error;
};

struct DependentVectors : Error {
    using Error::Error;
};

struct DegenerateForm : Error {
    using Error::Error;
};

/// A subspace is not closed under the bracket or the cobracket.
struct NotClosed : Error {
    using Error::Error;
};

/// Input violates a precondition that the operation cannot recover from.
struct InvalidInput : Error {
    using Error::Error;
};

}  // namespace superbialg
