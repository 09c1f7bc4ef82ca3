#pragma once

#include <stdexcept>
#include <string>

namespace kflag {

// Base class for every error raised by the library.  The CLI maps the
// concrete subclasses onto its exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition (rank mismatch, bad index, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

// A size bound (e.g. the rank limit on exhaustive enumeration) was exceeded.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

// exact_div found no quotient in the Laurent ring.
class NotDivisible : public Error {
public:
    using Error::Error;
};

// A class handed to decompose is not an R(T)-combination of the basis.
class NotInSpan : public Error {
public:
    using Error::Error;
};

// (lambda, mu) lies on a wall; the kernel presentation is not defined.
class NotRegular : public Error {
public:
    using Error::Error;
};

// An emitted kernel generator failed its half-space check.
class SoundnessFailure : public Error {
public:
    using Error::Error;
};

// Broken internal invariant, e.g. a non-exact division inside a divided
// difference.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace kflag
