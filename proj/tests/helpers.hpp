#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "minterp/compatible_pair.hpp"
#include "minterp/instance_io.hpp"
#include "minterp/interp_params.hpp"
#include "minterp/seqnorm.hpp"

namespace minterp::testing {

/// Two-point pair with both points shared: d0(a,b)=2, d1(a,b)=3, dX=1.
inline Instance e1_instance() {
    Instance inst;
    inst.points = {"a", "b"};
    inst.x0 = {"a", "b"};
    inst.x1 = {"a", "b"};
    inst.d0 = {{0.0, 2.0}, {2.0, 0.0}};
    inst.d1 = {{0.0, 3.0}, {3.0, 0.0}};
    inst.dx = {{0.0, 1.0}, {1.0, 0.0}};
    return inst;
}

/// Three points with singleton intersection {m}: X0={a,m}, X1={m,b}.
inline Instance e3_instance() {
    Instance inst;
    inst.points = {"a", "m", "b"};
    inst.x0 = {"a", "m"};
    inst.x1 = {"m", "b"};
    inst.d0 = {{0.0, 1.0}, {1.0, 0.0}};
    inst.d1 = {{0.0, 2.0}, {2.0, 0.0}};
    inst.dx = {{0.0, 1.0, 3.0}, {1.0, 0.0, 2.0}, {3.0, 2.0, 0.0}};
    return inst;
}

/// Single-metric pair on three points (X0 = X1 = X, d0 = d1 = dX).
inline Instance trivial3_instance() {
    Instance inst;
    inst.points = {"a", "b", "m"};
    inst.x0 = inst.points;
    inst.x1 = inst.points;
    inst.d0 = {{0.0, 2.0, 4.0}, {2.0, 0.0, 3.0}, {4.0, 3.0, 0.0}};
    inst.d1 = inst.d0;
    inst.dx = inst.d0;
    return inst;
}

inline CompatiblePair e1() { return e1_instance().to_pair(); }
inline CompatiblePair e3() { return e3_instance().to_pair(); }
inline CompatiblePair trivial3() { return trivial3_instance().to_pair(); }

/// Independent wide-window evaluation of Gamma_{theta,q} for a pointwise
/// profile. Plain truncated summation, no tail certificates; the window
/// grows until the edge terms fall below 1e-18 of the accumulated value.
template <typename ProfileFn>
double gamma_wide_sweep(const InterpParams& params, ProfileFn&& profile, int max_half = 4096) {
    const double theta = params.theta();
    if (params.q_is_inf()) {
        double sup = 0.0;
        for (int k = -max_half; k <= max_half; ++k)
            sup = std::max(sup, std::exp2(-k * theta) * std::abs(profile(k)));
        return sup;
    }
    const double q = params.q();
    double mass = 0.0;
    int half = 64;
    for (;;) {
        mass = 0.0;
        for (int k = -half; k <= half; ++k) mass += std::pow(std::exp2(-k * theta) * std::abs(profile(k)), q);
        const double edge = std::pow(std::exp2(half * theta) * std::abs(profile(-half)), q) +
                            std::pow(std::exp2(-half * theta) * std::abs(profile(half)), q);
        if (edge <= 1e-18 * std::max(mass, 1e-300) || half >= max_half) break;
        half *= 2;
    }
    return std::pow(mass, 1.0 / q);
}

/// The sequence min{1, 2^k} on [-half, half] with exact geometric tail
/// masses, ready for gamma(). This is the defining sequence of m_gamma;
/// at parameters (1-theta, p) it also evaluates m_holder.
inline WindowedSequence min_one_2k_window(const InterpParams& params, int half) {
    WindowedSequence seq;
    seq.k_lo = -half;
    seq.k_hi = half;
    for (int k = -half; k <= half; ++k) seq.values.push_back(std::min(1.0, std::exp2(k)));
    const double theta = params.theta();
    if (params.q_is_inf()) {
        seq.tail_hi = std::exp2(-(half + 1) * theta);
        seq.tail_lo = std::exp2(-(half + 1) * (1.0 - theta));
    } else {
        const double q = params.q();
        seq.tail_hi = std::exp2(-(half + 1) * theta * q) / (1.0 - std::exp2(-theta * q));
        seq.tail_lo = std::exp2(-(half + 1) * (1.0 - theta) * q) / (1.0 - std::exp2(-(1.0 - theta) * q));
    }
    return seq;
}

} // namespace minterp::testing
