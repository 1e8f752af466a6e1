#include "minterp/metric_matrix.hpp"

#include <cmath>
#include <sstream>

namespace minterp {

std::string ValidationReport::describe() const {
    if (violations.empty()) return "ok";
    std::ostringstream os;
    for (const auto& v : violations) {
        os << v.rule << "(";
        for (std::size_t i = 0; i < v.points.size(); ++i) {
            if (i) os << ",";
            os << v.points[i];
        }
        os << "): lhs=" << v.lhs << " rhs=" << v.rhs << "\n";
    }
    return os.str();
}

MetricMatrix::MetricMatrix(std::vector<std::string> labels, std::vector<std::vector<double>> rows)
    : labels_(std::move(labels)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw StructuralError("MetricMatrix: empty label set");
    if (rows.size() != n) throw StructuralError("MetricMatrix: table is not square (row count)");
    dist_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw StructuralError("MetricMatrix: table is not square (row " + std::to_string(i) + ")");
        for (std::size_t j = 0; j < n; ++j) {
            const double d = rows[i][j];
            if (!std::isfinite(d))
                throw StructuralError("MetricMatrix: non-finite entry at (" + labels_[i] + "," + labels_[j] + ")");
            if (d < 0.0)
                throw StructuralError("MetricMatrix: negative entry at (" + labels_[i] + "," + labels_[j] + ")");
            dist_[i * n + j] = d;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!index_.emplace(labels_[i], i).second)
            throw StructuralError("MetricMatrix: duplicate label '" + labels_[i] + "'");
    }
}

double MetricMatrix::at(const std::string& x, const std::string& y) const {
    const auto ix = index_of(x);
    const auto iy = index_of(y);
    if (!ix) throw DomainError("MetricMatrix: unknown label '" + x + "'");
    if (!iy) throw DomainError("MetricMatrix: unknown label '" + y + "'");
    return at(*ix, *iy);
}

std::optional<std::size_t> MetricMatrix::index_of(const std::string& label) const {
    const auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

MetricMatrix MetricMatrix::restrict_to(const std::vector<std::string>& sublabels) const {
    std::vector<std::vector<double>> rows(sublabels.size(), std::vector<double>(sublabels.size()));
    for (std::size_t i = 0; i < sublabels.size(); ++i)
        for (std::size_t j = 0; j < sublabels.size(); ++j)
            rows[i][j] = at(sublabels[i], sublabels[j]);
    return MetricMatrix(sublabels, std::move(rows));
}

ValidationReport MetricMatrix::validate(double tol) const {
    if (tol < 0.0 || !std::isfinite(tol)) throw DomainError("validate_metric: tolerance must be a nonnegative real");
    ValidationReport report;
    const std::size_t n = labels_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(at(i, i)) > tol)
            report.violations.push_back({"diagonal", {labels_[i]}, at(i, i), 0.0});
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(at(i, j) - at(j, i)) > tol)
                report.violations.push_back({"symmetry", {labels_[i], labels_[j]}, at(i, j), at(j, i)});
            if (at(i, j) <= tol)
                report.violations.push_back({"positivity", {labels_[i], labels_[j]}, at(i, j), 0.0});
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                const double lhs = at(i, k);
                const double rhs = at(i, j) + at(j, k);
                if (lhs > rhs + tol)
                    report.violations.push_back({"triangle", {labels_[i], labels_[j], labels_[k]}, lhs, rhs});
            }
        }
    return report;
}

} // namespace minterp
