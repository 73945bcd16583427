#pragma once

#include <stdexcept>
#include <string>

namespace lfforge {

// Base of every domain error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonIntegralInvariant : Error { using Error::Error; };
struct GenusOutOfRange : Error { using Error::Error; };
struct ParamOutOfRange : Error { using Error::Error; };

// n < 2 loses the nonseparating guarantee for the knot-surgered family,
// so it is rejected even though the genus formula would still make sense.
struct NOrderTooSmall : ParamOutOfRange { using ParamOutOfRange::ParamOutOfRange; };

struct NotEquivalent : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct NotPrimitive : Error { using Error::Error; };
struct EmptyWord : Error { using Error::Error; };
struct GenusMismatch : Error { using Error::Error; };
struct NotSymplectic : Error { using Error::Error; };
struct NonTrivialMonodromy : Error { using Error::Error; };
struct RangeTooSmall : Error { using Error::Error; };
struct ConsistencyViolation : Error { using Error::Error; };
struct BadRange : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

}  // namespace lfforge
