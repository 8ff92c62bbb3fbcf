#ifndef ORTHOSET_ERRORS_HPP
#define ORTHOSET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orthoset {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched fields/dimensions, invalid residues, bad flag combinations.
struct ContractViolation : Error {
    using Error::Error;
};

// Violated operation precondition (non-independent tuple, part too small, ...).
struct PreconditionError : Error {
    using Error::Error;
};

struct FingerprintSizeError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// Enumeration/memory budget exceeded.
struct BudgetError : Error {
    using Error::Error;
};

struct EmptySupportError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct NumericalError : Error {
    using Error::Error;
};

// Spread condition infeasible for the configured K; message carries the
// minimal feasible value.
struct SpreadnessError : Error {
    std::string minimal_k;
    SpreadnessError(const std::string& msg, std::string k_min)
        : Error(msg), minimal_k(std::move(k_min)) {}
};

// A proven inequality failed at runtime; indicates an implementation bug.
struct InternalCheckError : Error {
    using Error::Error;
};

}  // namespace orthoset

#endif
