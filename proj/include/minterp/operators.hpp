#pragma once

#include <map>
#include <string>

#include "minterp/compatible_pair.hpp"
#include "minterp/interp_params.hpp"

namespace minterp {

/// A total point map, label to label. Ordered so reports enumerate
/// deterministically.
using PointMap = std::map<std::string, std::string>;

/// Lipschitz constant of a point map between two finite metric spaces:
/// the maximum of cod(Tx,Ty)/dom(x,y) over distinct pairs, which on a
/// finite space equals the infimum over admissible constants. Domains
/// with fewer than two points yield 0 by convention.
double lipschitz_constant(const PointMap& map, const MetricMatrix& dom, const MetricMatrix& cod);

/// An operator between two compatible pairs: total on the domain union,
/// with map(X0) inside Y0 and map(X1) inside Y1 (checked at construction;
/// intersection points therefore land in the codomain intersection).
class OperatorTable {
public:
    OperatorTable(CompatiblePair domain, CompatiblePair codomain, PointMap map);

    const CompatiblePair& domain() const { return domain_; }
    const CompatiblePair& codomain() const { return codomain_; }
    const PointMap& map() const { return map_; }

    const std::string& apply(const std::string& x) const;

    /// Lipschitz constants of the restrictions T|X0: X0 -> Y0 and
    /// T|X1: X1 -> Y1, in the respective di metrics.
    double omega0() const;
    double omega1() const;

    /// Domain and codomain are the same pair (same labels, same tables).
    bool is_endomap(double tol = 0.0) const;

private:
    CompatiblePair domain_;
    CompatiblePair codomain_;
    PointMap map_;
};

struct InterpolationReport {
    double omega0 = 0.0;
    double omega1 = 0.0;
    double measured = 0.0;     // Lipschitz constant between the two delta metrics
    double bound_theta = 0.0;  // 2^theta * omega0^{1-theta} * omega1^theta
    double bound_max = 0.0;    // max{omega0, omega1}
    bool holds_theta = false;
    bool holds_max = false;
    std::string witness_x, witness_y; // pair attaining the measured ratio
};

/// Measures the Lipschitz constant of T between the delta metrics of the
/// two pairs (restricted to intersection points) and checks it against
/// both interpolation bounds, with omega0/omega1 computed, never supplied.
InterpolationReport verify_interpolation(const OperatorTable& op, const InterpParams& params,
                                         double tol = kDefaultTol);

struct FixedPointResult {
    std::string point;
    std::size_t max_orbit_steps = 0; // longest orbit over all start points
};

/// For an endomap whose restrictions both contract (omega0, omega1 < 1):
/// iterates T from every point of the union until stationary and checks
/// that all orbits stop at one identical point, which is also the unique
/// solution of T(p) = p by direct scan. Orbits on a finite space either
/// become stationary or cycle; a cycle is reported as an invariant
/// violation since contractions cannot sustain one.
FixedPointResult fixed_point(const OperatorTable& op, double tol = kDefaultTol);

/// On finite metric spaces every convergent sequence is eventually
/// constant, so every total point map is closed; the closedness
/// hypothesis of the interpolation theorem holds automatically.
std::string closedness_note(const OperatorTable& op);

} // namespace minterp
