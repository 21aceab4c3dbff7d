#pragma once

#include <stdexcept>
#include <string>

namespace drglab {

// Base of all library errors so callers can catch the whole family at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed caller input: bad edge endpoints, loops, invalid parameters.
struct InputError : Error {
    using Error::Error;
};

// The graph lacks structure an operation requires (connectivity, regularity,
// diameter 2, transitive group, ...).
struct StructureError : Error {
    using Error::Error;
};

// Instance exceeds a desk-scale cap.
struct ResourceError : Error {
    using Error::Error;
};

// A floating-point routine failed to converge within its iteration bound.
struct NumericError : Error {
    using Error::Error;
};

// A computation contradicts an identity that must hold; indicates a bug or a
// falsified structural claim, never ordinary bad input.
struct IntegrityError : Error {
    using Error::Error;
};

} // namespace drglab
