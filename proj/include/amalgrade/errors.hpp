#pragma once

#include <stdexcept>
#include <string>

namespace amalgrade {

// Base for everything thrown on purpose by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands live in different rings / fields / free modules.
struct AmbientMismatchError : Error {
    explicit AmbientMismatchError(const std::string& what) : Error(what) {}
};

// Ill-posed request: leading term of zero, inverse of zero, elimination block
// out of range, map images of the wrong arity, and so on.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A computation exceeded its step budget.
struct ResourceError : Error {
    explicit ResourceError(const std::string& what, long long steps_used)
        : Error(what), steps(steps_used) {}
    long long steps;
};

// The requested answer is not reachable by the implemented decision routes
// (e.g. minimal primes of a non-monomial ideal with no usable hint).
struct NotDecidableError : Error {
    explicit NotDecidableError(const std::string& what) : Error(what) {}
};

// Instance-file problems, with a source location.
struct ParseError : Error {
    ParseError(const std::string& what, int line, int col)
        : Error(what + " (line " + std::to_string(line) + ", col " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line;
    int col;
};

} // namespace amalgrade
