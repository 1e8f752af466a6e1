#pragma once

#include <vector>

#include "minterp/interp_params.hpp"
#include "minterp/types.hpp"

namespace minterp {

/// A bi-infinite nonnegative sequence truncated to the window
/// [k_lo, k_hi], together with certified bounds on the contribution of
/// the omitted indices. For q < inf the tail bounds are masses in the
/// weighted q-power sum, i.e. tail_lo >= sum_{k<k_lo} (2^{-k theta} x_k)^q;
/// for q = inf they bound the weighted supremum over the omitted indices.
struct WindowedSequence {
    int k_lo = 0;
    int k_hi = 0;
    std::vector<double> values; // x_k for k in [k_lo, k_hi]
    double tail_lo = 0.0;
    double tail_hi = 0.0;
};

/// The weighted l^q functional with dyadic weights 2^{-k theta}:
/// for q < inf, [sum_k (2^{-k theta} |x_k|)^q]^{1/q}; for q = inf the
/// weighted supremum. Returns a certified enclosure: the windowed value
/// is a lower bound, and folding in the tail bounds gives the upper.
CertifiedValue gamma(const InterpParams& params, const WindowedSequence& seq);

/// Gamma of the sequence min{1, 2^k}: two geometric series in closed
/// form, [1/(1-2^{-q theta}) + 2^{-q(1-theta)}/(1-2^{-q(1-theta)})]^{1/q}
/// for q < inf; the supremum is 1 (attained at k = 0) for q = inf.
double m_gamma(const InterpParams& params);

/// The constant of the Holder step: [sum_j (2^{j theta} min{1, 2^{-j}})^p]^{1/p}
/// with p the conjugate of q; equals 1 (supremum form) when q = 1. This is
/// a different constant from m_gamma in general; it coincides with
/// m_gamma(1-theta) taken at exponent p.
double m_holder(const InterpParams& params);

struct ReindexReport {
    double omega0 = 0.0;
    double omega1 = 0.0;
    double lambda = 0.0;  // omega0 / omega1
    long long shift = 0;  // r with 2^r <= lambda < 2^{r+1}; exact when dyadic
    bool dyadic = false;  // lambda is an integer power of two
    double c_theta = 1.0; // 1 in the dyadic case, 2^theta otherwise
    double lhs = 0.0;     // 2^{-r theta} * weighted norm of a
    double rhs = 0.0;     // c_theta * omega0^{1-theta} * omega1^theta * weighted norm of b
    double slack = 0.0;   // rhs - lhs
    bool holds = false;
};

/// Checks the reindexing bound: given a_k <= omega0 * b_k on a common
/// window, placing a at indices shifted by r = floor(log2(omega0/omega1))
/// multiplies its weighted norm by 2^{-r theta}, which must stay below
/// C(theta) * omega0^{1-theta} * omega1^theta times the norm of b, with
/// C(theta) = 1 when omega0/omega1 is a dyadic power and 2^theta otherwise.
/// Throws PreconditionError naming the first k where a_k > omega0 * b_k.
ReindexReport reindex_bound_check(const WindowedSequence& a, const WindowedSequence& b,
                                  double omega0, double omega1, const InterpParams& params,
                                  double tol = kDefaultTol);

} // namespace minterp
