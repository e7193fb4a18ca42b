#pragma once

#include <stdexcept>
#include <string>

namespace superyang {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Division by an exact zero (scalar, polynomial, or field element).
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// A substitution or evaluation hit a pole of a reduced fraction.
struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(what) {}
};

/// Input outside an operation's domain (malformed text, bad shape, nonstandard
/// tableau, inconsistent dimensions, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// A polynomial that must split over Q has a nonrational factor.
struct IrrationalRoots : Error {
    explicit IrrationalRoots(const std::string& what) : Error(what) {}
};

/// A functional equation has no solution of the required shape.
struct NoSolution : Error {
    explicit NoSolution(const std::string& what) : Error(what) {}
};

/// Two polynomials required to have equal degrees do not.
struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& what) : Error(what) {}
};

/// A joint kernel expected to be a line has a different dimension.
struct NonCyclic : Error {
    int dimension;
    explicit NonCyclic(int dim)
        : Error("highest-vector space has dimension " + std::to_string(dim)), dimension(dim) {}
};

/// An identity that must hold exactly failed; signals an internal fault.
struct VerificationError : Error {
    explicit VerificationError(const std::string& what) : Error(what) {}
};

/// A configured resource bound (e.g. the fusion degree cap) was exceeded.
struct ResourceBound : Error {
    explicit ResourceBound(const std::string& what) : Error(what) {}
};

}  // namespace superyang
