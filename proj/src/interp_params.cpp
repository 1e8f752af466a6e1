#include "minterp/interp_params.hpp"

#include <cmath>
#include <string>

namespace minterp {

InterpParams::InterpParams(double theta, double q) : theta_(theta), q_(q) {
    if (std::isnan(theta) || theta <= 0.0 || theta >= 1.0)
        throw DomainError("InterpParams: theta must lie in the open interval (0,1), got " + std::to_string(theta));
    if (std::isnan(q) || q < 1.0)
        throw DomainError("InterpParams: q must lie in [1,inf]");
    if (std::isinf(q_)) {
        p_ = 1.0;
    } else if (q_ == 1.0) {
        p_ = kInfiniteExponent;
    } else {
        p_ = q_ / (q_ - 1.0);
    }
}

} // namespace minterp
