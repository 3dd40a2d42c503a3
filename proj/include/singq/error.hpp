#pragma once

#include <stdexcept>
#include <string>

namespace singq {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A parameter is outside the domain of an operation (bad size, non-invertible
// coefficient, unknown name, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// An input exceeds a size guard.  The guards exist so that exhaustive
// searches stay tractable; callers can raise them explicitly.
class TooLargeError : public Error {
public:
    explicit TooLargeError(const std::string& what) : Error(what) {}
};

// Text input could not be parsed.  `line` is 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

}  // namespace singq
