#pragma once

#include <stdexcept>
#include <string>

namespace symreg {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live in polynomial rings with different variable counts.
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/// Malformed input text; `line` is 1-based.
struct ParseError : Error {
    int line;
    std::string message;
    ParseError(const std::string& what, int line_no)
        : Error("line " + std::to_string(line_no) + ": " + what),
          line(line_no),
          message(what) {}
};

/// A graded computation hit its degree cap while the top strand was nonzero.
struct TruncationError : Error {
    explicit TruncationError(const std::string& what) : Error(what) {}
};

/// A cooperative deadline expired inside a long-running sweep.
struct TimeoutError : Error {
    explicit TimeoutError(const std::string& what) : Error(what) {}
};

}  // namespace symreg
