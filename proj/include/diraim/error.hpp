#pragma once

#include <stdexcept>
#include <string>

namespace diraim {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A physical or numerical argument is outside the operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The configuration does not describe a bound state at the requested point.
class NotBoundError : public Error {
public:
    using Error::Error;
};

/// Root bracketing or iteration failed.
class SolverError : public Error {
public:
    using Error::Error;
};

/// Malformed configuration text; carries the offending line (0 when not line-specific).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    [[nodiscard]] int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace diraim
