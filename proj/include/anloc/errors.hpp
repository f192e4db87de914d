#pragma once

#include <stdexcept>
#include <string>

namespace anloc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller supplied arguments outside an operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// A power series was requested for a rational function whose
// denominator vanishes at the origin.
class PoleAtOriginError : public DomainError {
public:
    using DomainError::DomainError;
};

// Two filtration levels were given for the same ray.
class DuplicateRayError : public DomainError {
public:
    using DomainError::DomainError;
};

// The vertex set of a body expected to be 3-dimensional is flat.
class DegenerateHullError : public DomainError {
public:
    using DomainError::DomainError;
};

// A removed vertex subset does not span a face of the hull.
class InvalidFaceError : public DomainError {
public:
    using DomainError::DomainError;
};

// Internal cross-checks. These indicate a bug in the library (or an
// injected mutation), never bad input.
class CrossCheckError : public Error {
public:
    using Error::Error;
};

// A fitted quasi-polynomial or generating function disagrees with a
// sample that was held out of the fit.
class VerificationError : public CrossCheckError {
public:
    using CrossCheckError::CrossCheckError;
};

// A summand that must vanish on the boundary of an enumeration box did not.
class SentinelError : public CrossCheckError {
public:
    using CrossCheckError::CrossCheckError;
};

// A quantity that is a cohomology dimension came out negative.
class NegativityError : public CrossCheckError {
public:
    using CrossCheckError::CrossCheckError;
};

}  // namespace anloc
