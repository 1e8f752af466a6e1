#include "minterp/interp_jmprime.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "minterp/functionals.hpp"

namespace minterp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Transition terms over intersection indices, in the DP's aggregation
/// domain: (2^{-k theta} J_M(2^k; u, v))^q for q < inf, the plain
/// weighted value for q = inf. Distance tables are pre-resolved to
/// indices; the DP inner loop must not hash labels.
class TermEvaluator {
public:
    TermEvaluator(const CompatiblePair& pair, const InterpParams& params)
        : n_(pair.intersection_labels().size()),
          theta_(params.theta()),
          q_(params.q()),
          q_inf_(params.q_is_inf()),
          d0_(n_ * n_),
          d1_(n_ * n_) {
        const auto& pts = pair.intersection_labels();
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                d0_[i * n_ + j] = pair.d0().at(pts[i], pts[j]);
                d1_[i * n_ + j] = pair.d1().at(pts[i], pts[j]);
            }
    }

    double at(long long k, std::size_t u, std::size_t v) const {
        if (u == v) return 0.0;
        const double kd = static_cast<double>(k);
        const double j = std::max(d0_[u * n_ + v], std::exp2(kd) * d1_[u * n_ + v]);
        const double weighted = std::exp2(-kd * theta_) * j;
        return q_inf_ ? weighted : std::pow(weighted, q_);
    }

    double combine(double acc, double term) const { return q_inf_ ? std::max(acc, term) : acc + term; }

    double finish(double agg) const {
        if (q_inf_ || agg == 0.0) return agg;
        return std::pow(agg, 1.0 / q_);
    }

private:
    std::size_t n_;
    double theta_;
    double q_;
    bool q_inf_;
    std::vector<double> d0_, d1_;
};

/// Certified scale window for moves between intersection points: outside
/// it any single move between distinct points already outweighs the
/// trivial-chain cost J_M(1; x, y), so placements there cannot improve
/// the infimum.
struct MoveWindow {
    int k_lo;
    int k_hi;
};

MoveWindow certified_window(const CompatiblePair& pair, const InterpParams& params, double j1) {
    const auto& pts = pair.intersection_labels();
    double d0min = kInf;
    double d1min = kInf;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            d0min = std::min(d0min, pair.d0().at(pts[i], pts[j]));
            d1min = std::min(d1min, pair.d1().at(pts[i], pts[j]));
        }
    if (!(d0min > 0.0) || !(d1min > 0.0))
        throw DomainError("p_func: degenerate metric on the intersection (zero distance between distinct points)");
    // 2^{-k theta} d0min > j1 below k_lo; 2^{k(1-theta)} d1min > j1 above k_hi.
    const double c_lo = std::log2(d0min / j1) / params.theta();
    const double c_hi = std::log2(j1 / d1min) / (1.0 - params.theta());
    MoveWindow w;
    w.k_lo = std::min(static_cast<int>(std::floor(c_lo)) - 1, 0);
    w.k_hi = std::max(static_cast<int>(std::ceil(c_hi)) + 1, 0);
    if (w.k_hi - w.k_lo > 100000)
        throw DomainError("p_func: certified window is impractically wide (extreme distance ratios)");
    return w;
}

/// A positive p is the separator property; a zero for distinct endpoints
/// can only come from numeric underflow of the q-power terms (very large
/// finite q on very small distances), which must be loud, not silent.
double checked_positive(double value, const std::string& x, const std::string& y) {
    if (!(value > 0.0))
        throw InvariantViolation("p(" + x + "," + y +
                                 ") evaluated to a nonpositive value for distinct points; "
                                 "the q-power cost terms underflowed");
    return value;
}

/// Sequence positions s = 0..width-1 map to scale indices k_lo..k_hi+1;
/// the transition at position s happens at scale index k_lo + s. The left
/// boundary is pinned to y, the right to x.
struct DpTables {
    int k_lo = 0;
    std::size_t width = 0;
    std::size_t n = 0;
    std::vector<double> forward;      // forward[s*n+u]: best aggregate from (0, y) to (s, u)
    std::vector<std::size_t> parent;  // parent[s*n+u]: predecessor point of state (s, u)
    std::vector<double> suffix;       // suffix[s*n+u]: best aggregate from (s, u) to (width-1, x)
    double best = kInf;               // forward value at (width-1, x)
};

DpTables run_dp(const TermEvaluator& term, std::size_t n, std::size_t ix, std::size_t iy,
                const MoveWindow& win, bool witness_mode) {
    DpTables dp;
    dp.k_lo = win.k_lo;
    dp.width = static_cast<std::size_t>(win.k_hi - win.k_lo) + 2;
    dp.n = n;
    dp.forward.assign(dp.width * n, kInf);
    dp.forward[iy] = 0.0;
    if (witness_mode) dp.parent.assign(dp.width * n, n);
    for (std::size_t s = 0; s + 1 < dp.width; ++s) {
        const long long k = win.k_lo + static_cast<long long>(s);
        for (std::size_t u = 0; u < n; ++u) {
            const double base = dp.forward[s * n + u];
            if (base == kInf) continue;
            for (std::size_t v = 0; v < n; ++v) {
                const double cand = term.combine(base, term.at(k, u, v));
                double& slot = dp.forward[(s + 1) * n + v];
                if (cand < slot) {
                    slot = cand;
                    if (witness_mode) dp.parent[(s + 1) * n + v] = u;
                }
            }
        }
    }
    dp.best = dp.forward[(dp.width - 1) * n + ix];

    if (witness_mode) {
        dp.suffix.assign(dp.width * n, kInf);
        dp.suffix[(dp.width - 1) * n + ix] = 0.0;
        for (std::size_t s = dp.width - 1; s-- > 0;) {
            const long long k = win.k_lo + static_cast<long long>(s);
            for (std::size_t u = 0; u < n; ++u) {
                double best = kInf;
                for (std::size_t v = 0; v < n; ++v) {
                    const double tail = dp.suffix[(s + 1) * n + v];
                    if (tail == kInf) continue;
                    best = std::min(best, term.combine(term.at(k, u, v), tail));
                }
                dp.suffix[s * n + u] = best;
            }
        }
    }
    return dp;
}

/// Lex-preferred walk: move as early as possible, then always take the
/// smallest point index whose completion stays optimal (ties resolved at
/// 1e-12 relative granularity via the suffix table). Returns the full
/// state sequence only if its exact aggregate reproduces dp.best bitwise.
std::optional<std::vector<std::size_t>> greedy_walk(const TermEvaluator& term, const DpTables& dp,
                                                    std::size_t ix, std::size_t iy) {
    const double tol_eq = 1e-12 * std::max(1.0, dp.best);
    const auto near_best = [&](double v) { return std::abs(v - dp.best) <= tol_eq; };
    std::vector<std::size_t> walk{iy};
    bool moved = false;
    std::size_t cur = iy;
    double acc = 0.0;
    for (std::size_t s = 0; s + 1 < dp.width; ++s) {
        if (moved && cur == ix && near_best(acc)) break;
        const long long k = dp.k_lo + static_cast<long long>(s);
        std::size_t chosen = dp.n;
        for (std::size_t v = 0; v < dp.n; ++v) {
            if (!moved && v == cur) continue; // prefer the earliest possible first move
            const double cand = term.combine(term.combine(acc, term.at(k, cur, v)), dp.suffix[(s + 1) * dp.n + v]);
            if (near_best(cand)) {
                chosen = v;
                break;
            }
        }
        if (chosen == dp.n) {
            if (moved) return std::nullopt;
            const double stay = term.combine(acc, dp.suffix[(s + 1) * dp.n + cur]);
            if (!near_best(stay)) return std::nullopt;
            chosen = cur; // no optimal move yet; keep waiting at y
        }
        if (chosen != cur) moved = true;
        acc = term.combine(acc, term.at(k, cur, chosen));
        cur = chosen;
        walk.push_back(cur);
    }
    if (cur != ix || acc != dp.best) return std::nullopt;
    return walk;
}

/// Exact fallback: follow the forward DP's own parents, so the walk's
/// aggregate equals dp.best by construction.
std::vector<std::size_t> parent_walk(const DpTables& dp, std::size_t ix) {
    std::vector<std::size_t> walk(dp.width);
    walk[dp.width - 1] = ix;
    for (std::size_t s = dp.width - 1; s-- > 0;) {
        const std::size_t child = walk[s + 1];
        const std::size_t par = dp.parent[(s + 1) * dp.n + child];
        if (par >= dp.n) throw InvariantViolation("p_func: broken parent chain in witness reconstruction");
        walk[s] = par;
    }
    return walk;
}

void require_intersection_point(const CompatiblePair& pair, const std::string& p, const char* where) {
    if (!pair.in_intersection(p))
        throw DomainError(std::string(where) + ": point '" + p + "' not in X0 n X1");
}

std::size_t intersection_index(const CompatiblePair& pair, const std::string& p) {
    const auto& pts = pair.intersection_labels();
    return static_cast<std::size_t>(std::find(pts.begin(), pts.end(), p) - pts.begin());
}

} // namespace

double chain_cost(const CompatiblePair& pair, const InterpParams& params, const PlacedChain& chain) {
    if (chain.points.empty()) throw DomainError("chain_cost: empty chain");
    for (const auto& p : chain.points) require_intersection_point(pair, p, "chain_cost");
    const TermEvaluator term(pair, params);
    double agg = 0.0;
    for (std::size_t i = 0; i + 1 < chain.points.size(); ++i) {
        const std::size_t u = intersection_index(pair, chain.points[i]);
        const std::size_t v = intersection_index(pair, chain.points[i + 1]);
        agg = term.combine(agg, term.at(chain.start_k + static_cast<long long>(i), u, v));
    }
    return term.finish(agg);
}

PResult p_func(const CompatiblePair& pair, const InterpParams& params,
               const std::string& x, const std::string& y) {
    require_intersection_point(pair, x, "p_func");
    require_intersection_point(pair, y, "p_func");
    if (x == y) return {0.0, PlacedChain{{x}, 0}};

    const auto& pts = pair.intersection_labels();
    const std::size_t ix = intersection_index(pair, x);
    const std::size_t iy = intersection_index(pair, y);
    const double j1 = jm(pair, 1.0, x, y);
    const MoveWindow win = certified_window(pair, params, j1);
    const TermEvaluator term(pair, params);
    const DpTables dp = run_dp(term, pts.size(), ix, iy, win, true);

    std::vector<std::size_t> walk;
    if (auto greedy = greedy_walk(term, dp, ix, iy))
        walk = std::move(*greedy);
    else
        walk = parent_walk(dp, ix);

    // Trim leading and trailing stays; the placed chain spans the first
    // through the last move.
    std::size_t first = 0, last = 0;
    bool any = false;
    for (std::size_t s = 0; s + 1 < walk.size(); ++s)
        if (walk[s] != walk[s + 1]) {
            if (!any) first = s;
            last = s;
            any = true;
        }
    if (!any) throw InvariantViolation("p_func: optimal chain has no moves for distinct endpoints");

    PResult result;
    result.value = checked_positive(term.finish(dp.best), x, y);
    result.argmin.start_k = dp.k_lo + static_cast<long long>(first);
    for (std::size_t s = first; s <= last + 1; ++s) result.argmin.points.push_back(pts[walk[s]]);

    if (chain_cost(pair, params, result.argmin) != result.value)
        throw InvariantViolation("p_func: witness chain does not reproduce the optimal value");
    return result;
}

double p_value(const CompatiblePair& pair, const InterpParams& params,
               const std::string& x, const std::string& y) {
    require_intersection_point(pair, x, "p_value");
    require_intersection_point(pair, y, "p_value");
    if (x == y) return 0.0;
    const auto& pts = pair.intersection_labels();
    const std::size_t ix = intersection_index(pair, x);
    const std::size_t iy = intersection_index(pair, y);
    const double j1 = jm(pair, 1.0, x, y);
    const MoveWindow win = certified_window(pair, params, j1);
    const TermEvaluator term(pair, params);
    return checked_positive(term.finish(run_dp(term, pts.size(), ix, iy, win, false).best), x, y);
}

double big_p(const CompatiblePair& pair, const InterpParams& params,
             const std::string& x, const std::string& y) {
    require_intersection_point(pair, x, "big_p");
    require_intersection_point(pair, y, "big_p");
    if (x == y) return 0.0;
    const auto& pts = pair.intersection_labels();
    const std::size_t ix = intersection_index(pair, x);
    const std::size_t iy = intersection_index(pair, y);
    const double j1 = jm(pair, 1.0, x, y);
    const MoveWindow win = certified_window(pair, params, j1);
    const TermEvaluator term(pair, params);
    const double fwd = checked_positive(term.finish(run_dp(term, pts.size(), ix, iy, win, false).best), x, y);
    const double rev = checked_positive(term.finish(run_dp(term, pts.size(), iy, ix, win, false).best), y, x);
    return 0.5 * (fwd + rev);
}

DeltaMatrix::DeltaMatrix(MetricMatrix table, InterpParams params)
    : table_(std::move(table)), params_(params) {}

DeltaMatrix delta_matrix(const CompatiblePair& pair, const InterpParams& params) {
    const auto& pts = pair.intersection_labels();
    const std::size_t n = pts.size();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = big_p(pair, params, pts[i], pts[j]);
            d[i][j] = v;
            d[j][i] = v;
        }
    // Metric closure: weights are symmetric and nonnegative, so simple
    // chains suffice and Floyd-Warshall computes the chain infimum exactly.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return DeltaMatrix(MetricMatrix(pts, std::move(d)), params);
}

} // namespace minterp
