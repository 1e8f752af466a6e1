#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "minterp/types.hpp"

namespace minterp {

/// One violated rule with the witnessing points and the two sides of the
/// failed comparison.
struct Violation {
    std::string rule;                 // "diagonal", "symmetry", "positivity", "triangle", "compatibility0", ...
    std::vector<std::string> points;  // witnessing labels, in rule order
    double lhs = 0.0;
    double rhs = 0.0;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string describe() const;
};

/// A finite metric space as a labeled distance table. Construction checks
/// structure only (square, finite, nonnegative); the metric axioms are
/// checked by validate(), which reports rather than throws.
class MetricMatrix {
public:
    MetricMatrix(std::vector<std::string> labels, std::vector<std::vector<double>> rows);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    double at(std::size_t i, std::size_t j) const { return dist_[i * labels_.size() + j]; }
    double at(const std::string& x, const std::string& y) const;

    bool has(const std::string& label) const { return index_.count(label) > 0; }
    std::optional<std::size_t> index_of(const std::string& label) const;

    /// Restriction to a sublist of labels, preserving the given order.
    MetricMatrix restrict_to(const std::vector<std::string>& sublabels) const;

    /// Checks the four metric axioms within an absolute tolerance and
    /// reports every violation with its witnessing points.
    ValidationReport validate(double tol = kDefaultTol) const;

private:
    std::vector<std::string> labels_;
    std::vector<double> dist_; // row-major, size n*n
    std::unordered_map<std::string, std::size_t> index_;
};

inline ValidationReport validate_metric(const MetricMatrix& m, double tol = kDefaultTol) {
    return m.validate(tol);
}

} // namespace minterp
