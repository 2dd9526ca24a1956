#pragma once

#include <stdexcept>
#include <string>

namespace ellfm {

/// Base of all library errors. CLI exit codes are keyed on the subclass.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad rational text, bad JSON, out-of-range flags.
class InputError : public Error {
public:
    using Error::Error;
};

/// Classes or vectors built over different surface models.
class ModelMismatch : public InputError {
public:
    using InputError::InputError;
};

/// Scenario that violates dimension bounds (codimension outside [0, n]).
class InfeasibleScenario : public InputError {
public:
    using InputError::InputError;
};

/// A mathematical hypothesis of the requested operation does not hold.
class HypothesisViolation : public Error {
public:
    using Error::Error;
};

/// Slope of a rank-zero character.
class UndefinedSlope : public HypothesisViolation {
public:
    using HypothesisViolation::HypothesisViolation;
};

/// An internal cross-check disagreed. Never expected.
class InvariantBreach : public Error {
public:
    using Error::Error;
};

} // namespace ellfm
