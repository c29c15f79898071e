#pragma once

#include <stdexcept>
#include <string>

namespace vf {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text does not match the grammar; `position` is a 0-based byte offset.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct UnknownVariable : ParseError {
    UnknownVariable(const std::string& name, std::size_t pos)
        : ParseError("unknown variable '" + name + "'", pos) {}
};

// Operands live in different coefficient fields or different algebras.
struct AlgebraMismatch : Error {
    using Error::Error;
};

// specialize() was asked to evaluate at a point where a cleared denominator vanishes.
struct DenominatorVanishes : Error {
    using Error::Error;
};

// graph_ideal / b-function machinery requires a nonconstant polynomial.
struct ConstantF : Error {
    using Error::Error;
};

// A b-function candidate did not split into rational linear factors.  Root
// rationality is a theorem for the objects we compute, so this signals a bug.
struct NonRationalRoots : Error {
    using Error::Error;
};

// A configurable work budget was exhausted (exit code 3 at the CLI).
struct ResourceExhausted : Error {
    using Error::Error;
};

// The two charts of a P1 family disagree over the overlap.  Uniqueness of the
// flat extension over a smooth curve makes this a bug, never a data condition.
struct GluingFailure : Error {
    using Error::Error;
};

// A fiber of a P1 family failed its flatness certificate.
struct FlatnessCertificateFailed : Error {
    using Error::Error;
};

// hodge normalization rejected an element outside the allowed filtration level.
struct NotInHodgePiece : Error {
    using Error::Error;
};

} // namespace vf
