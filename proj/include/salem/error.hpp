// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace salem {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two values from different quadratic fields were combined.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

/// An input violated an operation's precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Root isolation or rounding could not be made unambiguous below the precision cap.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

/// Text could not be parsed into a value.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, long line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    long line() const noexcept { return line_; }

private:
    long line_;
};

} // namespace salem
