#pragma once

#include <stdexcept>
#include <string>

namespace cvtfrac {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter is outside its domain. The CLI maps these to
/// exit status 2.
class ArgumentError : public Error {
public:
    using Error::Error;
};

class InvalidBase : public ArgumentError {
public:
    explicit InvalidBase(long long base)
        : ArgumentError("invalid base " + std::to_string(base) + " (must be >= 2)") {}
};

class InvalidScale : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

class InvalidPair : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

class OutOfRange : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

class SizeLimit : public Error {
public:
    using Error::Error;
};

class InsufficientScales : public Error {
public:
    using Error::Error;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

class DegenerateSeries : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace cvtfrac
