#pragma once

#include <stdexcept>
#include <string>

namespace semiv {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input document.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

// Structurally valid input that violates a curve invariant.
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error("validation error: " + msg) {}
};

// A declared precision is too small for the requested computation.
struct PrecisionError : Error {
    PrecisionError(const std::string& msg, std::uint64_t required)
        : Error("insufficient precision: " + msg), required_precision(required) {}
    std::uint64_t required_precision;
};

// An operation needed data (defining polynomials or a conductor bound)
// that the input does not provide.
struct MissingDataError : Error {
    explicit MissingDataError(const std::string& msg) : Error("missing data: " + msg) {}
};

// A finite value was required but the element vanishes on the branch.
struct InfiniteValueError : Error {
    explicit InfiniteValueError(const std::string& msg) : Error("infinite value: " + msg) {}
};

// Leading coefficient requested from a series with no visible term.
struct OrderUnknownError : Error {
    explicit OrderUnknownError(const std::string& msg) : Error("order unknown: " + msg) {}
};

// A truncated entry would decide the result of a min.
struct TruncationError : Error {
    explicit TruncationError(const std::string& msg) : Error("unresolved truncation: " + msg) {}
};

// A self-check of a computed basis failed; indicates an internal bug.
struct VerificationError : Error {
    explicit VerificationError(const std::string& msg) : Error("verification failure: " + msg) {}
};

// Loop guard tripped; indicates a wrong bound or an internal bug.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error("internal error: " + msg) {}
};

}  // namespace semiv
