#pragma once

#include <stdexcept>
#include <string>

namespace dtroots {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

class InvalidDataSet : public Error {
public:
    using Error::Error;
};

class TypeMismatch : public Error {
public:
    using Error::Error;
};

/// Raised when a construction is requested for parameters that provably
/// admit no data set (e.g. a one-cone primary type B set with 3 | n).
class Unconstructible : public Error {
public:
    using Error::Error;
};

class DimMismatch : public Error {
public:
    using Error::Error;
};

class SearchCapExceeded : public Error {
public:
    using Error::Error;
};

} // namespace dtroots
