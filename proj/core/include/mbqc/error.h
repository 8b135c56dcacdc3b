#ifndef MBQC_ERROR_H
#define MBQC_ERROR_H

#include <stdexcept>
#include <string>

namespace mbqc {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingVariableError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct NonConstantExponentError : Error {
    using Error::Error;
};

struct InvalidQubitError : Error {
    using Error::Error;
};

/// A pattern or flow broke one of the structural rules checked by `validate`.
struct ValidationError : Error {
    using Error::Error;
};

/// The graph admits no causal flow for its inputs and outputs.
struct NoFlowError : Error {
    using Error::Error;
};

/// Byproduct elimination left a Z exponent on a measured qubit.
struct EliminationError : Error {
    using Error::Error;
};

struct NormalizationError : Error {
    using Error::Error;
};

struct CapExceededError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace mbqc

#endif
