#pragma once

#include <string>

#include "minterp/compatible_pair.hpp"
#include "minterp/interp_jmprime.hpp"
#include "minterp/interp_params.hpp"

namespace minterp {

/// Enumeration limits for the brute-force references. Exhausting a budget
/// throws BudgetError; an oracle never returns a truncated minimum as if
/// it were exact.
struct EnumBudget {
    int max_chain_len = 3;          // moves per placed chain (z has at most this many transitions)
    int k_lo = -10;                 // placement window for chain transitions
    int k_hi = 10;
    long long max_objects = 2'000'000; // cap on enumerated paths/chains
};

/// K_M by direct enumeration of every admissible simple path from x to y.
/// Simple paths suffice: step costs are nonnegative, so deleting the loop
/// between two visits of the same point never increases the total.
double km_bruteforce(const CompatiblePair& pair, double t,
                     const std::string& x, const std::string& y,
                     const EnumBudget& budget = {});

/// p_{theta,q} by direct enumeration of placed chains: every point
/// sequence y = z_0, ..., z_m = x with m <= max_chain_len moves over the
/// intersection, at every placement with transitions inside [k_lo, k_hi].
double p_bruteforce(const CompatiblePair& pair, const InterpParams& params,
                    const std::string& x, const std::string& y,
                    const EnumBudget& budget = {});

/// delta_{theta,q} by direct enumeration of every simple chain through
/// the intersection, with edge costs from the symmetrized brute-force p.
DeltaMatrix delta_bruteforce(const CompatiblePair& pair, const InterpParams& params,
                             const EnumBudget& budget = {});

} // namespace minterp
