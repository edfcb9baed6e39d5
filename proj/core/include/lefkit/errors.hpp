#pragma once

#include <stdexcept>
#include <string>

namespace lefkit {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Division by an exact zero.
class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Monomial division whose result would carry a negative exponent.
class ExponentUnderflow : public Error {
public:
    using Error::Error;
};

/// Vector/matrix shapes do not match the operation.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A coefficient refers to a name outside the ring basis.
class UnknownBasisName : public Error {
public:
    explicit UnknownBasisName(const std::string& name)
        : Error("unknown basis name: " + name), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

/// Malformed input text; carries a 1-based line/column position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error("parse error at " + std::to_string(line) + ":" +
                std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Argument outside the operation's documented domain.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace lefkit
