#include "minterp/compatible_pair.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace minterp {

namespace {

std::vector<std::string> union_in_ambient_order(const std::vector<std::string>& points,
                                                const MetricMatrix& d0, const MetricMatrix& d1) {
    std::vector<std::string> out;
    for (const auto& p : points)
        if (d0.has(p) || d1.has(p)) out.push_back(p);
    return out;
}

} // namespace

CompatiblePair::CompatiblePair(const std::vector<std::string>& points,
                               std::vector<std::string> x0, std::vector<std::string> x1,
                               MetricMatrix d0, MetricMatrix d1, const MetricMatrix& dx_ambient,
                               double c0, double c1)
    : x0_(std::move(x0)),
      x1_(std::move(x1)),
      d0_(std::move(d0)),
      d1_(std::move(d1)),
      dx_(dx_ambient.restrict_to(union_in_ambient_order(points, d0_, d1_))),
      c0_(c0),
      c1_(c1) {
    if (!std::isfinite(c0_) || c0_ <= 0.0 || !std::isfinite(c1_) || c1_ <= 0.0)
        throw StructuralError("CompatiblePair: compatibility constants must be positive finite reals");

    std::unordered_set<std::string> ambient(points.begin(), points.end());
    if (ambient.size() != points.size())
        throw StructuralError("CompatiblePair: duplicate ambient label");
    for (const auto& p : x0_)
        if (!ambient.count(p)) throw DomainError("CompatiblePair: X0 label '" + p + "' not in ambient point set");
    for (const auto& p : x1_)
        if (!ambient.count(p)) throw DomainError("CompatiblePair: X1 label '" + p + "' not in ambient point set");

    if (d0_.labels() != x0_) throw StructuralError("CompatiblePair: d0 labels must match X0 in order");
    if (d1_.labels() != x1_) throw StructuralError("CompatiblePair: d1 labels must match X1 in order");

    union_ = dx_.labels();
    for (const auto& p : union_)
        if (d0_.has(p) && d1_.has(p)) intersection_.push_back(p);
    if (intersection_.empty())
        throw DomainError("CompatiblePair: X0 and X1 must intersect; the construction is undefined otherwise");
}

bool CompatiblePair::is_trivial(double tol) const {
    if (x0_ != union_ || x1_ != union_) return false;
    for (std::size_t i = 0; i < union_.size(); ++i)
        for (std::size_t j = 0; j < union_.size(); ++j) {
            const double dx = dx_.at(i, j);
            if (std::abs(d0_.at(union_[i], union_[j]) - dx) > tol) return false;
            if (std::abs(d1_.at(union_[i], union_[j]) - dx) > tol) return false;
        }
    return true;
}

ValidationReport validate_pair(const CompatiblePair& pair, double tol) {
    if (tol < 0.0 || !std::isfinite(tol)) throw DomainError("validate_pair: tolerance must be a nonnegative real");
    ValidationReport report;
    const auto check_side = [&](const MetricMatrix& di, double ci, const char* rule) {
        const auto& labels = di.labels();
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = i + 1; j < labels.size(); ++j) {
                const double lhs = pair.dx().at(labels[i], labels[j]);
                const double rhs = ci * di.at(i, j);
                if (lhs > rhs + tol)
                    report.violations.push_back({rule, {labels[i], labels[j]}, lhs, rhs});
            }
    };
    check_side(pair.d0(), pair.c0(), "compatibility0");
    check_side(pair.d1(), pair.c1(), "compatibility1");
    return report;
}

std::vector<std::string> intersection(const CompatiblePair& pair) {
    return pair.intersection_labels();
}

} // namespace minterp
