#pragma once

#include <stdexcept>
#include <string>

namespace lindec {

// Root of the library's exception hierarchy. Discoverable failure modes that
// callers routinely branch on (e.g. non-invertible samples inside rejection
// loops) also have try_* variants returning std::optional.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user-supplied configuration: non-prime modulus, unknown protocol tag,
// malformed parameter overrides.
struct ConfigError : Error {
    using Error::Error;
};

// Field inverse of zero.
struct DivisionByZero : Error {
    using Error::Error;
};

// Mixing containers over different fields or algebras.
struct IncompatibleOperands : Error {
    using Error::Error;
};

// Shape mismatch: vector lengths, matrix sizes, empty seed sets.
struct DimensionError : Error {
    using Error::Error;
};

// Group enumeration exceeded the configured order bound.
struct GroupTooLarge : Error {
    using Error::Error;
};

// Matrix (over the field or over an algebra) has no two-sided inverse.
struct NotInvertible : Error {
    using Error::Error;
};

// Decomposition target lies outside the spanned subspace.
struct NotInSpan : Error {
    using Error::Error;
};

// Inconsistent linear system.
struct NoSolution : Error {
    using Error::Error;
};

// Public transcript data fails structural validation.
struct MalformedTranscript : Error {
    using Error::Error;
};

// A rejection-sampling loop exhausted its retry budget.
struct SamplerFailure : Error {
    using Error::Error;
};

} // namespace lindec
