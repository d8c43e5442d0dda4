#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frameguide {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Landmarks violate their invariants (out of range, degenerate eye line).
class InvalidLandmarks : public Error {
public:
    using Error::Error;
};

class InvalidFrame : public Error {
public:
    using Error::Error;
};

/// Value outside the documented domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class CatalogError : public Error {
public:
    using Error::Error;
};

/// Caller broke a sequencing contract, e.g. fed a timestamp that went backwards.
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Malformed input file. `line()` is 1-based; 0 means the whole input.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace frameguide
