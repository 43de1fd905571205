#pragma once

#include <stdexcept>
#include <string>

namespace tropdisc {

// Base class for every failure this library reports deliberately.
// Standard exceptions (std::invalid_argument etc.) are reserved for
// programming errors such as dimension mismatches.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// System validation: the coefficient-extraction matrix built from the omega
// columns is singular.
struct DegenerateOmega : Error {
    using Error::Error;
};

// System validation: a lambda column is repeated within one equation.
// Repetitions across equations are legal; the disjoint union keeps them as
// distinct coordinates.
struct DuplicateExponent : Error {
    using Error::Error;
};

// System validation: a lambda column is zero or equals its own equation's
// omega, so the equation is not in reduced form.
struct ZeroOrOmegaInLambda : Error {
    using Error::Error;
};

// Fan construction needs matroid rank at least 2; rank 0 or 1 has no proper
// flags to chain.
struct RankTooSmall : Error {
    using Error::Error;
};

// Ground set exceeds the subset-enumeration guard.
struct GroundSetTooLarge : Error {
    using Error::Error;
};

// Parameter evaluation hit a vanishing linear form or coordinate, so the
// monomial formula has a pole or an exact zero.
struct PoleOrZero : Error {
    using Error::Error;
};

// Newton polytope request on a support that does not span the ambient space.
struct DegenerateSupport : Error {
    using Error::Error;
};

// Lattice index is undefined because every maximal minor vanishes.
struct RankDeficient : Error {
    using Error::Error;
};

// Text input (polynomial or system file) could not be parsed; position is a
// 0-based byte offset into the input.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at offset " + std::to_string(position)), offset(position) {}
    std::size_t offset;
};

}  // namespace tropdisc
