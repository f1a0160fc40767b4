#pragma once

#include <stdexcept>
#include <string>

namespace faco {

/// Base class for every error raised by the solver library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class MalformedInput : public Error {
public:
    using Error::Error;
};

class UnsupportedFormat : public Error {
public:
    using Error::Error;
};

class InvalidTour : public Error {
public:
    using Error::Error;
};

/// Coincident points where a strictly positive distance is required.
class DegenerateInstance : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class CorruptFile : public Error {
public:
    using Error::Error;
};

/// A relocation or 2-opt move whose preconditions do not hold.
class DegenerateMove : public Error {
public:
    using Error::Error;
};

class NoFeasibleNode : public Error {
public:
    using Error::Error;
};

class BoundViolation : public Error {
public:
    using Error::Error;
};

}  // namespace faco
