#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcoact {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct DegreeOverflow : Error {
    using Error::Error;
};

struct InvalidAlgebra : Error {
    using Error::Error;
};

struct NotAHomomorphism : Error {
    using Error::Error;
};

struct DescentFailure : Error {
    using Error::Error;
};

/// Thrown when the saturation engine materializes more monomials than the
/// configured cap allows.
struct BudgetExceeded : Error {
    std::size_t count;
    explicit BudgetExceeded(std::size_t c)
        : Error("monomial budget exceeded: " + std::to_string(c) + " monomials materialized"),
          count(c) {}
};

/// A coaction matrix violates one of the structure-constant constraint
/// families; (i, j, s) names the failing instance (j < 0 for the unit family).
struct ConstraintViolation : Error {
    std::string family;
    long i, j, s;
    ConstraintViolation(std::string fam, long i_, long j_, long s_)
        : Error("coaction constraint violated: " + fam + " at (i=" + std::to_string(i_) +
                ", j=" + std::to_string(j_) + ", s=" + std::to_string(s_) + ")"),
          family(std::move(fam)), i(i_), j(j_), s(s_) {}
};

} // namespace pcoact
