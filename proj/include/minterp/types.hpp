#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace minterp {

/// Default absolute tolerance for all metric-axiom and inequality checks.
inline constexpr double kDefaultTol = 1e-9;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed data: non-square tables, non-finite or negative entries,
/// inconsistent label sets. Distinct from axiom violations, which are
/// reported, not thrown.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A point or parameter outside the domain an operation is defined on.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A stated precondition does not hold for the given inputs.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An enumeration budget was exhausted. Oracles never return partial
/// results as exact values; they throw this instead.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// Certified window widening hit its hard cap before reaching the
/// requested interval width.
class WindowCapError : public Error {
public:
    using Error::Error;
};

/// A computation produced a state that contradicts a proved property.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// A two-sided enclosure of a real value. `lower` is always a valid
/// lower bound and `upper` a valid upper bound of the exact quantity.
struct CertifiedValue {
    double lower = 0.0;
    double upper = 0.0;

    CertifiedValue() = default;
    CertifiedValue(double lo, double hi) : lower(lo), upper(hi) {
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw StructuralError("CertifiedValue: non-finite endpoint");
        if (lo > hi)
            throw StructuralError("CertifiedValue: lower exceeds upper");
    }

    static CertifiedValue exact(double v) { return {v, v}; }

    double midpoint() const { return 0.5 * (lower + upper); }
    double width() const { return upper - lower; }
};

} // namespace minterp
