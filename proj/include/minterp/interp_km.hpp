#pragma once

#include <string>
#include <vector>

#include "minterp/compatible_pair.hpp"
#include "minterp/interp_params.hpp"
#include "minterp/seqnorm.hpp"

namespace minterp {

struct BetaOptions {
    double rel_tol = 1e-9;      // target interval width relative to J_M(1;x,y)
    int initial_half_width = 40;
    int max_half_width = 120;   // hard cap; exceeded -> WindowCapError
};

/// The K_M-interpolated metric on the intersection: Gamma_{theta,q} of
/// the dyadic profile k -> K_M(2^k; x, y), as a certified enclosure.
/// Tails are certified by K_M(2^k) <= min{1, 2^k} * J_M(1; x, y), whose
/// omitted mass is an explicit geometric series. The window doubles until
/// the interval width drops below rel_tol * J_M(1; x, y).
///
/// On a finite instance the relative completion of the intersection in
/// (X0 u X1, K_M(1)) adds no points (every Cauchy sequence is eventually
/// constant), so this metric *is* the interpolated-space metric.
CertifiedValue beta(const CompatiblePair& pair, const InterpParams& params,
                    const std::string& x, const std::string& y,
                    const BetaOptions& opts = {});

class BetaMatrix {
public:
    BetaMatrix(std::vector<std::string> points, std::vector<CertifiedValue> values, InterpParams params);

    const std::vector<std::string>& points() const { return points_; }
    const InterpParams& params() const { return params_; }
    const CertifiedValue& at(std::size_t i, std::size_t j) const { return values_[i * points_.size() + j]; }

    /// Metric axioms on the midpoints, with the certification widths
    /// absorbed into the comparison slack.
    ValidationReport validate(double tol = kDefaultTol) const;

private:
    std::vector<std::string> points_;
    std::vector<CertifiedValue> values_;
    InterpParams params_;
};

BetaMatrix beta_matrix(const CompatiblePair& pair, const InterpParams& params, const BetaOptions& opts = {});

} // namespace minterp
