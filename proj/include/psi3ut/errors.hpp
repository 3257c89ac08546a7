#pragma once

#include <stdexcept>
#include <string>

namespace psi3ut {

// Base for all domain errors raised by the library. Each concrete type
// corresponds to one failure condition so callers (and the CLI exit-code
// mapping) can distinguish them.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// dyadic
struct EvenNotInvertible : Error {
    using Error::Error;
};
struct NotTwoAdicallyIntegral : Error {
    using Error::Error;
};
struct ModulusMismatch : Error {
    using Error::Error;
};

// valuations
struct ZeroInput : Error {
    using Error::Error;
};
struct IndexOrder : Error {
    using Error::Error;
};

// cring
struct NotInSpan : Error {
    using Error::Error;
};

// utmatrix
struct SizeMismatch : Error {
    using Error::Error;
};
struct NonUnitDiagonal : Error {
    using Error::Error;
};
struct NonUnitPivot : Error {
    using Error::Error;
};
struct HypothesisViolation : Error {
    using Error::Error;
};

// pipeline
struct IndexRange : Error {
    using Error::Error;
};
struct NonUnitDivision : Error {
    using Error::Error;
};
struct NonUnitSuperdiagonal : Error {
    using Error::Error;
};
struct SizeTooSmall : Error {
    using Error::Error;
};

// cli
struct ConfigError : Error {
    using Error::Error;
};

} // namespace psi3ut
