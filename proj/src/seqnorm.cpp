#include "minterp/seqnorm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace minterp {

namespace {

void check_sequence(const WindowedSequence& seq) {
    if (seq.k_lo > seq.k_hi || seq.values.empty())
        throw DomainError("gamma: empty window");
    if (seq.values.size() != static_cast<std::size_t>(seq.k_hi - seq.k_lo + 1))
        throw StructuralError("gamma: window length does not match value count");
    if (seq.tail_lo < 0.0 || seq.tail_hi < 0.0 || !std::isfinite(seq.tail_lo) || !std::isfinite(seq.tail_hi))
        throw DomainError("gamma: tail bounds must be nonnegative finite reals");
    for (const double v : seq.values)
        if (!std::isfinite(v)) throw StructuralError("gamma: non-finite sequence value");
}

} // namespace

CertifiedValue gamma(const InterpParams& params, const WindowedSequence& seq) {
    check_sequence(seq);
    const double theta = params.theta();
    if (params.q_is_inf()) {
        double w = 0.0;
        for (int k = seq.k_lo; k <= seq.k_hi; ++k) {
            const double x = std::abs(seq.values[static_cast<std::size_t>(k - seq.k_lo)]);
            w = std::max(w, std::exp2(-static_cast<double>(k) * theta) * x);
        }
        const double upper = std::max({w, seq.tail_lo, seq.tail_hi});
        return CertifiedValue(w, upper);
    }
    const double q = params.q();
    double mass = 0.0;
    for (int k = seq.k_lo; k <= seq.k_hi; ++k) {
        const double x = std::abs(seq.values[static_cast<std::size_t>(k - seq.k_lo)]);
        mass += std::pow(std::exp2(-static_cast<double>(k) * theta) * x, q);
    }
    const double lower = std::pow(mass, 1.0 / q);
    const double upper = std::pow(mass + seq.tail_lo + seq.tail_hi, 1.0 / q);
    return CertifiedValue(lower, std::max(lower, upper));
}

double m_gamma(const InterpParams& params) {
    if (params.q_is_inf()) return 1.0;
    const double q = params.q();
    const double theta = params.theta();
    const double a = std::exp2(-q * theta);           // ratio of the k >= 0 series
    const double b = std::exp2(-q * (1.0 - theta));   // ratio of the k < 0 series
    return std::pow(1.0 / (1.0 - a) + b / (1.0 - b), 1.0 / q);
}

double m_holder(const InterpParams& params) {
    if (params.p_is_inf()) return 1.0; // q = 1: supremum of 2^{j theta} min{1, 2^{-j}}, attained at j = 0
    const double p = params.p();
    const double theta = params.theta();
    const double a = std::exp2(-p * (1.0 - theta));   // ratio of the j >= 0 series
    const double b = std::exp2(-p * theta);           // ratio of the j < 0 series
    return std::pow(1.0 / (1.0 - a) + b / (1.0 - b), 1.0 / p);
}

ReindexReport reindex_bound_check(const WindowedSequence& a, const WindowedSequence& b,
                                  double omega0, double omega1, const InterpParams& params,
                                  double tol) {
    if (!std::isfinite(omega0) || omega0 <= 0.0 || !std::isfinite(omega1) || omega1 <= 0.0)
        throw DomainError("reindex_bound_check: omega0, omega1 must be positive");
    if (a.k_lo != b.k_lo || a.k_hi != b.k_hi)
        throw DomainError("reindex_bound_check: sequences must share the same window");
    if (a.tail_lo != 0.0 || a.tail_hi != 0.0 || b.tail_lo != 0.0 || b.tail_hi != 0.0)
        throw DomainError("reindex_bound_check: only finitely supported sequences are accepted (zero tails)");
    check_sequence(a);
    check_sequence(b);

    for (int k = a.k_lo; k <= a.k_hi; ++k) {
        const std::size_t i = static_cast<std::size_t>(k - a.k_lo);
        if (a.values[i] > omega0 * b.values[i] + tol)
            throw PreconditionError("reindex_bound_check: hypothesis a_k <= omega0*b_k violated at k=" +
                                    std::to_string(k));
    }

    ReindexReport rep;
    rep.omega0 = omega0;
    rep.omega1 = omega1;
    rep.lambda = omega0 / omega1;
    const double r_exact = std::log2(rep.lambda);
    const double r_round = std::round(r_exact);
    rep.dyadic = std::abs(r_exact - r_round) <= 1e-12;
    rep.shift = rep.dyadic ? static_cast<long long>(r_round)
                           : static_cast<long long>(std::floor(r_exact));
    rep.c_theta = rep.dyadic ? 1.0 : std::exp2(params.theta());

    const double norm_a = gamma(params, a).lower;
    const double norm_b = gamma(params, b).lower;
    rep.lhs = std::exp2(-static_cast<double>(rep.shift) * params.theta()) * norm_a;
    rep.rhs = rep.c_theta * std::pow(omega0, 1.0 - params.theta()) * std::pow(omega1, params.theta()) * norm_b;
    rep.slack = rep.rhs - rep.lhs;
    rep.holds = rep.lhs <= rep.rhs + tol;
    return rep;
}

} // namespace minterp
