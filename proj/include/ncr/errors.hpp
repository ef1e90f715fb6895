#pragma once

#include <stdexcept>
#include <string>

namespace ncr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotAProjector : Error {
    using Error::Error;
};

struct NotASymmetry : Error {
    using Error::Error;
};

struct NotASplitting : Error {
    using Error::Error;
};

/// Carries a human-readable description of which complementarity
/// condition (V1+W1, V2+W2, V1+W2, V2+W1) failed.
struct NotAdmissible : Error {
    using Error::Error;
};

struct NotInRelativeGrassmannian : Error {
    using Error::Error;
};

struct NotAMuPartition : Error {
    using Error::Error;
};

struct BothParametersZero : Error {
    using Error::Error;
};

struct ZeroParameter : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct UnknownName : Error {
    using Error::Error;
};

struct SizeLimitExceeded : Error {
    using Error::Error;
};

} // namespace ncr
