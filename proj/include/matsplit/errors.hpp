#pragma once

#include <stdexcept>
#include <string>

namespace matsplit {

// Base class for all library errors. Subclasses are named after the
// condition they report so callers can catch them individually.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    using Error::Error;
};
struct FieldMismatch : Error {
    using Error::Error;
};
struct UnknownElement : Error {
    using Error::Error;
};
struct GroundSetTooLarge : Error {
    using Error::Error;
};
struct NotACircuit : Error {
    using Error::Error;
};
struct ColoopPresent : Error {
    using Error::Error;
};
struct LabelCollision : Error {
    using Error::Error;
};
struct PreconditionViolated : Error {
    using Error::Error;
};
struct KernelTooLarge : Error {
    using Error::Error;
};
struct EulerianTheoremRequiresOddP : Error {
    using Error::Error;
};
struct ERequiresB : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct RejectionBudgetExhausted : Error {
    using Error::Error;
};

}  // namespace matsplit
