#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trustyuri {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed RDF input. Carries the 1-based line number where parsing failed.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A name or URI that was expected to carry an artifact code does not.
class NotTrustyReference : public Error {
public:
    using Error::Error;
};

/// Requested module transfer is not allowed (only RB to RA is).
class NotTransferable : public Error {
public:
    using Error::Error;
};

} // namespace trustyuri
