#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpaflow {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument violates the documented precondition of an operation.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A brute-force routine was asked to go beyond its hard size cap.
class LimitError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace lpaflow
