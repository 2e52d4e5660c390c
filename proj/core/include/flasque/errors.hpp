#pragma once

#include <stdexcept>
#include <string>

namespace flasque {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A group or matrix exceeded a configured enumeration bound.
class SizeError : public Error {
public:
    using Error::Error;
};

/// An argument violated a documented precondition.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// No encoded rule or construction covers the requested case.
class UnsupportedCase : public Error {
public:
    using Error::Error;
};

/// A self-check on a constructed object failed. Always a bug.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace flasque
