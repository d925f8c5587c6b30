#pragma once

#include <stdexcept>
#include <string>

namespace heyde {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Group construction rejected (empty factor list or a factor below 2).
struct InvalidGroupSpec : Error {
    using Error::Error;
};

/// Matrix fails the homomorphism congruence a[i][j]*n_j = 0 (mod n_i).
struct NotAHomomorphism : Error {
    using Error::Error;
};

/// An endomorphism was required to be bijective but is not.
struct NotAnAutomorphism : Error {
    using Error::Error;
};

/// Weights do not form a probability distribution (negative entry or sum != 1).
struct NotAProbability : Error {
    using Error::Error;
};

/// Operands live on different groups.
struct GroupMismatch : Error {
    using Error::Error;
};

/// A characteristic function vanishes where a logarithm (or the theorem
/// hypothesis) needs it to be nonzero.
struct VanishingCF : Error {
    using Error::Error;
};

/// The group has an element of order 2 (some factor is even).
struct OrderTwoElementPresent : Error {
    using Error::Error;
};

/// The conditional-symmetry hypothesis does not hold for the instance.
struct HypothesisNotSatisfied : Error {
    using Error::Error;
};

/// An internal assertion of the decomposition algorithm failed. Under the
/// stated preconditions this indicates a bug, never expected input.
struct DecompositionFailed : Error {
    using Error::Error;
};

/// A distribution's support escapes the required subgroup.
struct SupportViolation : Error {
    using Error::Error;
};

/// Rejection sampling hit its retry bound.
struct GenerationExhausted : Error {
    using Error::Error;
};

/// A Theta-class operation received parameters outside the class.
struct InvalidThetaInput : Error {
    using Error::Error;
};

/// A grid checker received an empty evaluation grid.
struct GridEmpty : Error {
    using Error::Error;
};

/// Malformed or schema-violating configuration document.
struct ConfigError : Error {
    using Error::Error;
};

/// Stable kind tag for reports and exit-code mapping.
inline const char* error_kind(const Error& e) {
    if (dynamic_cast<const InvalidGroupSpec*>(&e)) return "InvalidGroupSpec";
    if (dynamic_cast<const NotAHomomorphism*>(&e)) return "NotAHomomorphism";
    if (dynamic_cast<const NotAnAutomorphism*>(&e)) return "NotAnAutomorphism";
    if (dynamic_cast<const NotAProbability*>(&e)) return "NotAProbability";
    if (dynamic_cast<const GroupMismatch*>(&e)) return "GroupMismatch";
    if (dynamic_cast<const VanishingCF*>(&e)) return "VanishingCF";
    if (dynamic_cast<const OrderTwoElementPresent*>(&e)) return "OrderTwoElementPresent";
    if (dynamic_cast<const HypothesisNotSatisfied*>(&e)) return "HypothesisNotSatisfied";
    if (dynamic_cast<const DecompositionFailed*>(&e)) return "DecompositionFailed";
    if (dynamic_cast<const SupportViolation*>(&e)) return "SupportViolation";
    if (dynamic_cast<const GenerationExhausted*>(&e)) return "GenerationExhausted";
    if (dynamic_cast<const InvalidThetaInput*>(&e)) return "InvalidThetaInput";
    if (dynamic_cast<const GridEmpty*>(&e)) return "GridEmpty";
    if (dynamic_cast<const ConfigError*>(&e)) return "ConfigError";
    return "Error";
}

}  // namespace heyde
