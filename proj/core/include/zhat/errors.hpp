#pragma once

#include <stdexcept>
#include <string>

namespace zhat {

/// Base class of every domain error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimeModulus : Error {
    explicit NonPrimeModulus(long p)
        : Error("modulus " + std::to_string(p) + " is not prime") {}
};

struct MixedContext : Error {
    MixedContext() : Error("operands belong to different ring contexts") {}
    explicit MixedContext(const std::string& what) : Error(what) {}
};

struct NotAUnit : Error {
    NotAUnit() : Error("element is not a unit") {}
    explicit NotAUnit(const std::string& what) : Error(what) {}
};

struct NotApproximateRoot : Error {
    NotApproximateRoot() : Error("value is not a root of the polynomial modulo p") {}
};

struct SingularRoot : Error {
    SingularRoot() : Error("derivative vanishes modulo p; root is not simple") {}
};

struct ImproperIdeal : Error {
    ImproperIdeal() : Error("ideal is the whole ring") {}
    explicit ImproperIdeal(const std::string& what) : Error(what) {}
};

struct PrecisionExhausted : Error {
    PrecisionExhausted()
        : Error("verdict depends on digits beyond the working precision") {}
};

struct DenominatorInPrime : Error {
    DenominatorInPrime() : Error("denominator lies in the prime being inverted") {}
};

struct NotOpen : Error {
    NotOpen() : Error("point set is not closed under generization") {}
};

struct NotACover : Error {
    NotACover() : Error("family does not cover the open set") {}
};

struct ZeroHasNoClass : Error {
    ZeroHasNoClass() : Error("zero has no archimedean class") {}
};

/// Malformed external input; the message names the offending field.
struct ParseError : Error {
    explicit ParseError(const std::string& field, const std::string& why)
        : Error("field '" + field + "': " + why) {}
};

} // namespace zhat
