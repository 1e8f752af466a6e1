#pragma once

#include <string>
#include <vector>

#include "minterp/metric_matrix.hpp"
#include "minterp/types.hpp"

namespace minterp {

/// Two overlapping point sets with their own metrics, continuously
/// included in a common ambient metric via constants C0, C1:
/// dX(x,y) <= Ci * di(x,y) on Xi. Construction enforces the hard
/// structural requirements (consistent labels, nonempty intersection);
/// the compatibility inequality itself is checked by validate_pair.
class CompatiblePair {
public:
    /// `points` fixes the ambient label order; X0, X1 must be subsets.
    /// `dx_ambient` is indexed by `points`; it is restricted to X0 u X1
    /// internally. Label order of the union and intersection follows the
    /// order of first appearance in `points`.
    CompatiblePair(const std::vector<std::string>& points,
                   std::vector<std::string> x0, std::vector<std::string> x1,
                   MetricMatrix d0, MetricMatrix d1, const MetricMatrix& dx_ambient,
                   double c0 = 1.0, double c1 = 1.0);

    const std::vector<std::string>& x0_labels() const { return x0_; }
    const std::vector<std::string>& x1_labels() const { return x1_; }
    const std::vector<std::string>& union_labels() const { return union_; }
    const std::vector<std::string>& intersection_labels() const { return intersection_; }

    const MetricMatrix& d0() const { return d0_; }
    const MetricMatrix& d1() const { return d1_; }
    /// Ambient metric restricted to X0 u X1.
    const MetricMatrix& dx() const { return dx_; }

    double c0() const { return c0_; }
    double c1() const { return c1_; }

    bool in_x0(const std::string& label) const { return d0_.has(label); }
    bool in_x1(const std::string& label) const { return d1_.has(label); }
    bool in_union(const std::string& label) const { return dx_.has(label); }
    bool in_intersection(const std::string& label) const { return in_x0(label) && in_x1(label); }

    /// X0 = X1 = X with d0 = d1 = dX entrywise: the single-metric case.
    bool is_trivial(double tol = kDefaultTol) const;

private:
    std::vector<std::string> x0_, x1_, union_, intersection_;
    MetricMatrix d0_, d1_, dx_;
    double c0_, c1_;
};

/// Checks the compatibility inequality dX <= Ci*di (within tol) for both
/// restrictions and reports every violating pair.
ValidationReport validate_pair(const CompatiblePair& pair, double tol = kDefaultTol);

/// X0 n X1 in canonical (ambient first-appearance) order.
std::vector<std::string> intersection(const CompatiblePair& pair);

} // namespace minterp
