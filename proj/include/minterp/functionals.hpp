#pragma once

#include <string>
#include <utility>
#include <vector>

#include "minterp/compatible_pair.hpp"

namespace minterp {

/// The step graph underlying K_M: nodes are X0 u X1, and an edge joins
/// (u,v) exactly when the pair lies in X0^2 or X1^2. The graph is
/// connected whenever the intersection is nonempty, since each Xi spans
/// a clique and the cliques share the intersection.
struct AdmissibleGraph {
    std::vector<std::string> nodes;                       // union, canonical order
    std::vector<std::pair<std::size_t, std::size_t>> edges; // i<j, index pairs into nodes

    bool connected() const;
};

AdmissibleGraph admissible_graph(const CompatiblePair& pair);

/// Step cost h_t: min{d0, t*d1} when both metrics apply (both points in
/// the intersection), d0 when the pair lies only in X0^2, t*d1 when only
/// in X1^2. Mixed pairs are not admissible steps.
double h_cost(const CompatiblePair& pair, double t, const std::string& x, const std::string& y);

/// J_M(t; x, y) = max{d0(x,y), t*d1(x,y)} on the intersection.
double jm(const CompatiblePair& pair, double t, const std::string& x, const std::string& y);

/// K_M(t; x, y): infimum of summed h_t step costs over admissible linking
/// sequences from x to y. All step costs are nonnegative, so dropping any
/// revisit of a point never increases the cost; the infimum is therefore
/// attained by a simple path and equals the shortest-path distance in the
/// admissible graph, computed here by a label-setting sweep.
double km(const CompatiblePair& pair, double t, const std::string& x, const std::string& y);

/// K_M sampled on the dyadic grid t = 2^k, k in [k_lo, k_hi].
std::vector<std::pair<int, double>> km_profile(const CompatiblePair& pair,
                                               const std::string& x, const std::string& y,
                                               int k_lo, int k_hi);

/// Whole tables, for validation sweeps. km_matrix is over the union,
/// jm_matrix over the intersection.
MetricMatrix km_matrix(const CompatiblePair& pair, double t);
MetricMatrix jm_matrix(const CompatiblePair& pair, double t);

} // namespace minterp
