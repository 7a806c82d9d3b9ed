#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kgeo {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

// A vertex index outside [0, n).
class RangeError : public Error {
public:
    using Error::Error;
};

// Malformed digraph text. line() is 1-based; 0 when the error is not tied to a line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string & what) :
        Error(line ? "line " + std::to_string(line) + ": " + what : what), _line(line)
    {
    }

    auto line() const -> std::size_t { return _line; }

private:
    std::size_t _line;
};

// An operation was called on input outside its stated domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace kgeo
