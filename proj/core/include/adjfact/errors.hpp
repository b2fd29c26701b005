#ifndef ADJFACT_ERRORS_HPP
#define ADJFACT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace adjfact {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two operands live over polynomial rings of different size n, or matrix
// dimensions do not line up.
struct SizeMismatchError : Error {
    using Error::Error;
};

// A defining matrix identity failed at construction time
// (e.g. phi*psi != f*id for a matrix factorization).
struct IdentityError : Error {
    using Error::Error;
};

// A matrix that must be invertible over the coefficient field is not
// (its determinant is zero or a nonconstant polynomial).
struct NotInvertibleError : Error {
    using Error::Error;
};

// det(phi) did not strip down to a nonzero rational after removing all
// factors of f; the irreducibility precondition fails.
struct ResidueNotUnitError : Error {
    using Error::Error;
};

// Bad user-level input: unparsable polynomial text, malformed JSON, an
// index out of range, a missing assignment in a specialization.
struct InputError : Error {
    using Error::Error;
};

} // namespace adjfact

#endif
