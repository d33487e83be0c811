#pragma once

#include <stdexcept>
#include <string>

namespace fracbound {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the admissible set (x ∉ [−1,1], α ∉ (1,2], λ < 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

/// Boundary combination not among DD, DN, ND, NN, N*D, N*N.
class UnsupportedPair : public Error {
public:
    using Error::Error;
};

/// A constructed object failed its own structural check.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Matrix exponential failed its defect check.
class StepFailure : public Error {
public:
    using Error::Error;
};

class SingularSystem : public Error {
public:
    using Error::Error;
};

class EmptyEnsemble : public Error {
public:
    using Error::Error;
};

}  // namespace fracbound
