#include "minterp/interp_km.hpp"

#include <algorithm>
#include <cmath>

#include "minterp/functionals.hpp"

namespace minterp {

namespace {

/// Certified tail bounds for the profile k -> K_M(2^k; x, y), from
/// K_M(2^k) <= min{1, 2^k} * J1. For q < inf the bounds are q-power
/// masses; for q = inf, weighted suprema.
WindowedSequence profile_window(const CompatiblePair& pair, const InterpParams& params,
                                const std::string& x, const std::string& y,
                                double j1, int half_width) {
    WindowedSequence seq;
    seq.k_lo = -half_width;
    seq.k_hi = half_width;
    seq.values.reserve(2 * static_cast<std::size_t>(half_width) + 1);
    for (const auto& [k, v] : km_profile(pair, x, y, seq.k_lo, seq.k_hi)) {
        (void)k;
        seq.values.push_back(v);
    }
    const double theta = params.theta();
    if (params.q_is_inf()) {
        seq.tail_hi = std::exp2(-(seq.k_hi + 1) * theta) * j1;
        seq.tail_lo = std::exp2((seq.k_lo - 1) * (1.0 - theta)) * j1;
    } else {
        const double q = params.q();
        const double rhi = std::exp2(-q * theta);         // ratio for k > k_hi
        const double rlo = std::exp2(-q * (1.0 - theta)); // ratio for k < k_lo
        seq.tail_hi = std::pow(std::exp2(-(seq.k_hi + 1) * theta) * j1, q) / (1.0 - rhi);
        seq.tail_lo = std::pow(std::exp2((seq.k_lo - 1) * (1.0 - theta)) * j1, q) / (1.0 - rlo);
    }
    return seq;
}

} // namespace

CertifiedValue beta(const CompatiblePair& pair, const InterpParams& params,
                    const std::string& x, const std::string& y, const BetaOptions& opts) {
    if (!pair.in_intersection(x)) throw DomainError("beta: point '" + x + "' not in X0 n X1");
    if (!pair.in_intersection(y)) throw DomainError("beta: point '" + y + "' not in X0 n X1");
    if (x == y) return CertifiedValue(0.0, 0.0);

    const double j1 = jm(pair, 1.0, x, y);
    const double target = opts.rel_tol * j1;
    int half = std::min(opts.initial_half_width, opts.max_half_width);
    for (;;) {
        const CertifiedValue value = gamma(params, profile_window(pair, params, x, y, j1, half));
        if (value.width() <= target) return value;
        if (half >= opts.max_half_width)
            throw WindowCapError("beta: certified width " + std::to_string(value.width()) +
                                 " above target at the +-" + std::to_string(half) + " window cap");
        half = std::min(2 * half, opts.max_half_width);
    }
}

BetaMatrix::BetaMatrix(std::vector<std::string> points, std::vector<CertifiedValue> values, InterpParams params)
    : points_(std::move(points)), values_(std::move(values)), params_(params) {
    if (values_.size() != points_.size() * points_.size())
        throw StructuralError("BetaMatrix: value table is not square");
}

ValidationReport BetaMatrix::validate(double tol) const {
    ValidationReport report;
    const std::size_t n = points_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& d = at(i, i);
        if (d.lower != 0.0 || d.upper != 0.0)
            report.violations.push_back({"diagonal", {points_[i]}, d.midpoint(), 0.0});
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& dij = at(i, j);
            const auto& dji = at(j, i);
            if (std::abs(dij.midpoint() - dji.midpoint()) > 0.5 * (dij.width() + dji.width()) + tol)
                report.violations.push_back({"symmetry", {points_[i], points_[j]}, dij.midpoint(), dji.midpoint()});
            if (dij.upper <= tol)
                report.violations.push_back({"positivity", {points_[i], points_[j]}, dij.upper, 0.0});
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                const double lhs = at(i, k).midpoint();
                const double rhs = at(i, j).midpoint() + at(j, k).midpoint();
                const double slack = 0.5 * (at(i, k).width() + at(i, j).width() + at(j, k).width());
                if (lhs > rhs + slack + tol)
                    report.violations.push_back({"triangle", {points_[i], points_[j], points_[k]}, lhs, rhs});
            }
        }
    return report;
}

BetaMatrix beta_matrix(const CompatiblePair& pair, const InterpParams& params, const BetaOptions& opts) {
    const auto& pts = pair.intersection_labels();
    const std::size_t n = pts.size();
    std::vector<CertifiedValue> values(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const CertifiedValue v = beta(pair, params, pts[i], pts[j], opts);
            values[i * n + j] = v;
            values[j * n + i] = v;
        }
    return BetaMatrix(pts, std::move(values), params);
}

} // namespace minterp
