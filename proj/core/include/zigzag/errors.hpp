#pragma once

#include <stdexcept>
#include <string>

namespace zigzag {

/// Malformed input: bad file contents, bad option values, out-of-range indices.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structural mismatch between values that are being combined (dimensions, fields, types).
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed. This signals a bug, never bad input.
struct InvariantViolation : std::logic_error {
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace zigzag
