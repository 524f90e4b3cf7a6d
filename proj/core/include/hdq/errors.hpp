#pragma once

#include <stdexcept>
#include <string>

namespace hdq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument: index out of range, mismatched sizes, bad option.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A matrix does not have the required column structure.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Malformed text input (token, header, record).
class ParseError : public Error {
public:
    using Error::Error;
};

/// The request has no solution in the requested form.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// A size or time budget would be exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace hdq
