#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace csimtl {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration or argument values (bad counts, ratios, unknown ids).
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Tensor/layer dimension mismatch at runtime.
struct ShapeError : Error {
    explicit ShapeError(const std::string& what) : Error(what) {}
};

// A named parameter was not found in a ParamSet.
struct MissingParamError : Error {
    explicit MissingParamError(const std::string& what) : Error(what) {}
};

// Malformed file content (bad magic, version, truncated payload). Carries the
// byte offset where parsing failed.
struct FormatError : Error {
    FormatError(const std::string& what, std::uint64_t offset_bytes)
        : Error(what + " (at offset " + std::to_string(offset_bytes) + ")"),
          offset(offset_bytes) {}
    std::uint64_t offset;
};

// File parsed but its content is inconsistent with what the caller expects
// (tensor count, compression ratio, dims).
struct IntegrityError : Error {
    explicit IntegrityError(const std::string& what) : Error(what) {}
};

// Normalization scale collapsed to zero (all-zero training split).
struct DegenerateScaleError : Error {
    explicit DegenerateScaleError(const std::string& what) : Error(what) {}
};

// NMSE reference sample has zero norm. Carries the offending sample index.
struct ZeroNormError : Error {
    ZeroNormError(const std::string& what, std::int64_t sample_index)
        : Error(what + " (sample " + std::to_string(sample_index) + ")"),
          sample(sample_index) {}
    std::int64_t sample;
};

}  // namespace csimtl
