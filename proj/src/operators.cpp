#include "minterp/operators.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "minterp/interp_jmprime.hpp"

namespace minterp {

double lipschitz_constant(const PointMap& map, const MetricMatrix& dom, const MetricMatrix& cod) {
    const auto& labels = dom.labels();
    for (const auto& x : labels) {
        const auto it = map.find(x);
        if (it == map.end()) throw DomainError("lipschitz_constant: map is not total; missing '" + x + "'");
        if (!cod.has(it->second))
            throw DomainError("lipschitz_constant: image '" + it->second + "' outside the codomain metric");
    }
    if (labels.size() < 2) return 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            const double num = cod.at(map.at(labels[i]), map.at(labels[j]));
            const double den = dom.at(i, j);
            if (den <= 0.0)
                throw DomainError("lipschitz_constant: zero distance between distinct domain points");
            worst = std::max(worst, num / den);
        }
    return worst;
}

OperatorTable::OperatorTable(CompatiblePair domain, CompatiblePair codomain, PointMap map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
    for (const auto& x : domain_.union_labels()) {
        const auto it = map_.find(x);
        if (it == map_.end())
            throw DomainError("OperatorTable: map must be total on X0 u X1; missing '" + x + "'");
        const auto& tx = it->second;
        if (!codomain_.in_union(tx))
            throw DomainError("OperatorTable: image '" + tx + "' not in the codomain union");
        if (domain_.in_x0(x) && !codomain_.in_x0(tx))
            throw DomainError("OperatorTable: T(X0) must lie in Y0; '" + x + "' maps to '" + tx + "'");
        if (domain_.in_x1(x) && !codomain_.in_x1(tx))
            throw DomainError("OperatorTable: T(X1) must lie in Y1; '" + x + "' maps to '" + tx + "'");
    }
}

const std::string& OperatorTable::apply(const std::string& x) const {
    const auto it = map_.find(x);
    if (it == map_.end()) throw DomainError("OperatorTable: '" + x + "' not in the domain");
    return it->second;
}

double OperatorTable::omega0() const { return lipschitz_constant(map_, domain_.d0(), codomain_.d0()); }

double OperatorTable::omega1() const { return lipschitz_constant(map_, domain_.d1(), codomain_.d1()); }

bool OperatorTable::is_endomap(double tol) const {
    if (domain_.union_labels() != codomain_.union_labels()) return false;
    if (domain_.x0_labels() != codomain_.x0_labels()) return false;
    if (domain_.x1_labels() != codomain_.x1_labels()) return false;
    const auto same = [&](const MetricMatrix& a, const MetricMatrix& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j)
                if (std::abs(a.at(i, j) - b.at(a.labels()[i], a.labels()[j])) > tol) return false;
        return true;
    };
    return same(domain_.d0(), codomain_.d0()) && same(domain_.d1(), codomain_.d1()) &&
           same(domain_.dx(), codomain_.dx());
}

InterpolationReport verify_interpolation(const OperatorTable& op, const InterpParams& params, double tol) {
    InterpolationReport rep;
    rep.omega0 = op.omega0();
    rep.omega1 = op.omega1();
    rep.bound_theta = std::exp2(params.theta()) * std::pow(rep.omega0, 1.0 - params.theta()) *
                      std::pow(rep.omega1, params.theta());
    rep.bound_max = std::max(rep.omega0, rep.omega1);

    const DeltaMatrix delta_dom = delta_matrix(op.domain(), params);
    const DeltaMatrix delta_cod = delta_matrix(op.codomain(), params);
    const auto& pts = op.domain().intersection_labels();
    rep.measured = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const auto& tx = op.apply(pts[i]);
            const auto& ty = op.apply(pts[j]);
            const double num = (tx == ty) ? 0.0 : delta_cod.at(tx, ty);
            const double ratio = num / delta_dom.at(i, j);
            if (ratio > rep.measured) {
                rep.measured = ratio;
                rep.witness_x = pts[i];
                rep.witness_y = pts[j];
            }
        }
    rep.holds_theta = rep.measured <= rep.bound_theta + tol;
    rep.holds_max = rep.measured <= rep.bound_max + tol;
    return rep;
}

FixedPointResult fixed_point(const OperatorTable& op, double tol) {
    if (!op.is_endomap(0.0))
        throw PreconditionError("fixed_point: domain and codomain must be the same pair");
    const double w0 = op.omega0();
    const double w1 = op.omega1();
    if (w0 >= 1.0 || w1 >= 1.0)
        throw PreconditionError("fixed_point: both restrictions must contract (omega0, omega1 < 1); got omega0=" +
                                std::to_string(w0) + " omega1=" + std::to_string(w1));
    (void)tol;

    const auto& nodes = op.domain().union_labels();
    std::string limit;
    FixedPointResult result;
    for (const auto& start : nodes) {
        std::string cur = start;
        std::unordered_set<std::string> seen{cur};
        std::size_t steps = 0;
        for (;;) {
            const std::string next = op.apply(cur);
            if (next == cur) break;
            ++steps;
            if (!seen.insert(next).second)
                throw InvariantViolation("fixed_point: orbit from '" + start +
                                         "' cycles without becoming stationary, contradicting contraction");
            cur = next;
        }
        result.max_orbit_steps = std::max(result.max_orbit_steps, steps);
        if (limit.empty()) {
            limit = cur;
        } else if (cur != limit) {
            throw InvariantViolation("fixed_point: orbits reach two distinct stationary points '" + limit +
                                     "' and '" + cur + "'");
        }
    }
    result.point = limit;
    return result;
}

std::string closedness_note(const OperatorTable&) {
    return "closed: automatic (finite instance; every convergent sequence is eventually constant, "
           "so the graph of any total point map is closed)";
}

} // namespace minterp
