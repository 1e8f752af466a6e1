#pragma once

#include <limits>

#include "minterp/types.hpp"

namespace minterp {

/// q = infinity is a distinguished value (IEEE +inf), selecting the
/// supremum form of every sequence functional rather than a summed form.
inline constexpr double kInfiniteExponent = std::numeric_limits<double>::infinity();

/// Interpolation parameters: exponent theta in (0,1), integrability q in
/// [1,inf], and the Holder conjugate p with 1/p + 1/q = 1 (p=inf when q=1,
/// p=1 when q=inf).
class InterpParams {
public:
    InterpParams(double theta, double q);

    double theta() const { return theta_; }
    double q() const { return q_; }
    double p() const { return p_; }

    bool q_is_inf() const { return std::isinf(q_); }
    bool p_is_inf() const { return std::isinf(p_); }

private:
    double theta_;
    double q_;
    double p_;
};

} // namespace minterp
