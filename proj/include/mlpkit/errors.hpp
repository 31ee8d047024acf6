#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mlpkit {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched vector/matrix/layer dimensions.
struct DimensionError : Error {
    using Error::Error;
};

// Invalid configuration value (hyperparameter, CLI option, generator setting).
struct ConfigError : Error {
    using Error::Error;
};

// Malformed input file; message names the offending row/column/field.
struct ParseError : Error {
    using Error::Error;
};

// Structurally well-formed data that violates an invariant.
struct ValidationError : Error {
    using Error::Error;
};

// Empty batch/log where a non-empty one is required.
struct DegenerateInputError : Error {
    using Error::Error;
};

// Derivative requested for a non-differentiable activation.
struct NonDifferentiableError : Error {
    using Error::Error;
};

// Dataset cannot be split with both classes present in every part.
struct StratificationError : Error {
    using Error::Error;
};

// Filesystem read/write failure.
struct IoError : Error {
    using Error::Error;
};

// Training produced a non-finite loss or an unusable learning rate.
struct DivergenceError : Error {
    std::size_t epoch;
    DivergenceError(std::size_t at_epoch, const std::string& message)
        : Error(message), epoch(at_epoch) {}
};

}  // namespace mlpkit
