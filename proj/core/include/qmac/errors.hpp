#pragma once

#include <stdexcept>
#include <string>

namespace qmac {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Problems with user-supplied data (configs, ensembles, codebooks, parameters).
// The CLI maps these to exit status 1.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

// Problems detected while computing (operator preconditions, resource caps).
// The CLI maps these to exit status 2.
class ComputationError : public Error {
public:
    using Error::Error;
};

class NotSquareError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class NotHermitianError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class NegativeEigenvalueError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class DimensionMismatchError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class DimensionCapError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class InvalidEnsembleError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

class InvalidDistributionError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

class InvalidCodebookError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

class UnknownLetterError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

class InvalidProfileError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

class InvalidSamplerPlanError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

class LambdaOutOfRangeError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

class LengthMismatchError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

class InvalidStateError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

class ConfigError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

}  // namespace qmac
