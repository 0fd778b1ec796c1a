#pragma once

#include <stdexcept>
#include <string>

namespace compton {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (bad unit, bad range).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation at a pole of a special function (e.g. log-gamma at 0, -1, ...).
class PoleError : public Error {
public:
    using Error::Error;
};

/// The amplitude is evaluated exactly on its 1/mu or 1/p1 pole.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// A direction is requested for a vanishing momentum transfer.
class DegenerateGeometryError : public Error {
public:
    using Error::Error;
};

/// An iterative or adaptive procedure ran out of budget.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace compton
