#pragma once

#include <stdexcept>
#include <string>

namespace confspace {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, bad tuple length, invalid flags.
struct InputError : Error {
    using Error::Error;
};

/// A (space, k, n) combination outside the supported range.
struct UnsupportedError : Error {
    using Error::Error;
};

/// Input that violates a nondegeneracy precondition (dependent vectors, zero norm).
struct DegenerateInputError : Error {
    using Error::Error;
};

/// Rejection sampling exceeded its retry budget.
struct SamplingError : Error {
    using Error::Error;
};

/// Path discretization too coarse for unambiguous continuation.
struct MeshError : Error {
    using Error::Error;
};

/// A lift endpoint outside the finite subgroup that admits exact classification.
struct ClassificationError : Error {
    using Error::Error;
};

/// A point inside (or within tolerance of) an excluded degeneracy set.
struct BoundaryError : Error {
    using Error::Error;
};

/// Graph operation that requires connectivity; carries the component count.
struct DisconnectedError : Error {
    int components;
    DisconnectedError(const std::string& msg, int comps) : Error(msg), components(comps) {}
};

} // namespace confspace
