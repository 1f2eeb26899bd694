#pragma once

#include <stdexcept>
#include <string>

namespace genlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two words (or a word and a structure) are over different alphabets.
class AlphabetMismatch : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its documented domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A sphere enumeration would exceed the configured horizon.
class HorizonExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (JSON, rationals, encodings).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A construction (guard, reduction, machine) cannot be built from its inputs.
class ConstructionError : public Error {
public:
    using Error::Error;
};

}  // namespace genlab
