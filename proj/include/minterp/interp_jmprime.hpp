#pragma once

#include <string>
#include <vector>

#include "minterp/compatible_pair.hpp"
#include "minterp/interp_params.hpp"
#include "minterp/metric_matrix.hpp"

namespace minterp {

/// A finite chain of intersection points z_0..z_m together with an
/// integer placement. It models the eventually constant bi-infinite
/// sequence S with S_k = z_0 for k <= start_k, S_{start_k+i} = z_i, and
/// S_k = z_m for k >= start_k + m. The left tail (z_0) is the y side and
/// the right tail (z_m) the x side; only the transitions inside the
/// placed window can contribute cost. Repeated consecutive points are
/// allowed and contribute nothing (they encode gaps between moves).
struct PlacedChain {
    std::vector<std::string> points;
    long long start_k = 0;

    std::size_t transitions() const { return points.empty() ? 0 : points.size() - 1; }
};

/// Gamma_{theta,q} of the transition costs J_M(2^k; S_k, S_{k+1}) of a
/// placed chain; a finite computation since only the placed window moves.
double chain_cost(const CompatiblePair& pair, const InterpParams& params, const PlacedChain& chain);

struct PResult {
    double value = 0.0;
    PlacedChain argmin;
};

/// p_{theta,q}(x, y): the exact infimum of chain_cost over all eventually
/// constant bi-infinite linking sequences from x to y (left tail y, right
/// tail x), computed by dynamic programming over states (scale index,
/// current point). The scale window is certified: any move placed outside
/// it costs strictly more than the single-transition chain at k = 0,
/// whose cost is J_M(1; x, y), so omitting those placements cannot lose
/// the infimum. Among optimal chains the returned witness has the
/// lexicographically smallest (start_k, point sequence), with ties
/// resolved at 1e-12 relative granularity.
PResult p_func(const CompatiblePair& pair, const InterpParams& params,
               const std::string& x, const std::string& y);

/// Value of p_{theta,q} without the witness chain; same DP, cheaper.
double p_value(const CompatiblePair& pair, const InterpParams& params,
               const std::string& x, const std::string& y);

/// The symmetrization P_{theta,q}(x,y) = (p(x,y) + p(y,x)) / 2.
double big_p(const CompatiblePair& pair, const InterpParams& params,
             const std::string& x, const std::string& y);

/// The J_M'-interpolated metric on the intersection.
class DeltaMatrix {
public:
    DeltaMatrix(MetricMatrix table, InterpParams params);

    const std::vector<std::string>& points() const { return table_.labels(); }
    const InterpParams& params() const { return params_; }
    double at(std::size_t i, std::size_t j) const { return table_.at(i, j); }
    double at(const std::string& x, const std::string& y) const { return table_.at(x, y); }
    const MetricMatrix& table() const { return table_; }

    ValidationReport validate(double tol = kDefaultTol) const { return table_.validate(tol); }

private:
    MetricMatrix table_;
    InterpParams params_;
};

/// delta_{theta,q}: the infimum of summed P costs over finite chains in
/// the intersection. P is symmetric and nonnegative, so simple chains
/// suffice and the infimum is the metric closure (all-pairs shortest
/// chains) of the P table. On a finite instance the relative completion
/// adds no points, so (intersection, delta) is the interpolated space.
DeltaMatrix delta_matrix(const CompatiblePair& pair, const InterpParams& params);

} // namespace minterp
