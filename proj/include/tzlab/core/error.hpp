#pragma once

#include <stdexcept>
#include <string>

namespace tzlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An iterative or asymptotic method could not reach its accuracy target.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Geometrically degenerate input (collinear points, empty rectangle, ...).
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// Malformed input file. Carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline void require(bool cond, const char* msg) {
    if (!cond) throw DomainError(msg);
}

}  // namespace detail
}  // namespace tzlab
