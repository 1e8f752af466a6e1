#include "minterp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "minterp/functionals.hpp"

namespace minterp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void spend(long long& remaining, const char* what) {
    if (--remaining < 0) throw BudgetError(std::string(what) + ": enumeration budget exhausted");
}

struct PathSearch {
    const CompatiblePair& pair;
    double t;
    std::size_t target;
    long long remaining;
    std::vector<bool> visited;
    std::vector<std::size_t> path;
    double best = kInf;

    void dfs(std::size_t u, double cost) {
        if (u == target) {
            spend(remaining, "km_bruteforce");
            best = std::min(best, cost);
            return;
        }
        const auto& nodes = pair.union_labels();
        for (std::size_t v = 0; v < nodes.size(); ++v) {
            if (visited[v]) continue;
            const bool both0 = pair.in_x0(nodes[u]) && pair.in_x0(nodes[v]);
            const bool both1 = pair.in_x1(nodes[u]) && pair.in_x1(nodes[v]);
            if (!both0 && !both1) continue;
            visited[v] = true;
            dfs(v, cost + h_cost(pair, t, nodes[u], nodes[v]));
            visited[v] = false;
        }
    }
};

} // namespace

double km_bruteforce(const CompatiblePair& pair, double t,
                     const std::string& x, const std::string& y,
                     const EnumBudget& budget) {
    const auto ix = pair.dx().index_of(x);
    const auto iy = pair.dx().index_of(y);
    if (!ix) throw DomainError("km_bruteforce: point '" + x + "' not in X0 u X1");
    if (!iy) throw DomainError("km_bruteforce: point '" + y + "' not in X0 u X1");
    if (*ix == *iy) return 0.0;
    PathSearch search{pair, t, *iy, budget.max_objects, std::vector<bool>(pair.union_labels().size(), false), {}, kInf};
    search.visited[*ix] = true;
    search.dfs(*ix, 0.0);
    if (search.best == kInf)
        throw InvariantViolation("km_bruteforce: no admissible path found despite nonempty intersection");
    return search.best;
}

double p_bruteforce(const CompatiblePair& pair, const InterpParams& params,
                    const std::string& x, const std::string& y,
                    const EnumBudget& budget) {
    if (!pair.in_intersection(x)) throw DomainError("p_bruteforce: point '" + x + "' not in X0 n X1");
    if (!pair.in_intersection(y)) throw DomainError("p_bruteforce: point '" + y + "' not in X0 n X1");
    if (x == y) return 0.0;

    const auto& pts = pair.intersection_labels();
    long long remaining = budget.max_objects;
    double best = kInf;

    // Chains are built recursively: z_0 = y fixed, z_m = x, middles free.
    // Consecutive repeats are kept: they encode gaps between moves and can
    // place two moves at non-adjacent scales.
    std::vector<std::string> chain{y};
    const auto evaluate_placements = [&](const std::vector<std::string>& points) {
        const int m = static_cast<int>(points.size()) - 1;
        for (int start = budget.k_lo; start + m - 1 <= budget.k_hi; ++start) {
            spend(remaining, "p_bruteforce");
            best = std::min(best, chain_cost(pair, params, PlacedChain{points, start}));
        }
    };
    const std::function<void(int)> extend = [&](int slots_left) {
        if (chain.back() == x && chain.size() > 1) evaluate_placements(chain);
        if (slots_left == 0) return;
        for (const auto& z : pts) {
            chain.push_back(z);
            extend(slots_left - 1);
            chain.pop_back();
        }
    };
    extend(budget.max_chain_len);
    if (best == kInf)
        throw BudgetError("p_bruteforce: no chain within the length budget reaches '" + x + "'");
    return best;
}

DeltaMatrix delta_bruteforce(const CompatiblePair& pair, const InterpParams& params,
                             const EnumBudget& budget) {
    const auto& pts = pair.intersection_labels();
    const std::size_t n = pts.size();

    std::vector<double> edge(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double fwd = p_bruteforce(pair, params, pts[i], pts[j], budget);
            const double rev = p_bruteforce(pair, params, pts[j], pts[i], budget);
            edge[i * n + j] = edge[j * n + i] = 0.5 * (fwd + rev);
        }

    // Minimum over simple chains by depth-first enumeration.
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    long long remaining = budget.max_objects;
    std::vector<bool> used(n, false);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = s + 1; t < n; ++t) {
            double best = kInf;
            std::fill(used.begin(), used.end(), false);
            used[s] = true;
            const std::function<void(std::size_t, double)> dfs = [&](std::size_t u, double cost) {
                if (u == t) {
                    spend(remaining, "delta_bruteforce");
                    best = std::min(best, cost);
                    return;
                }
                for (std::size_t v = 0; v < n; ++v) {
                    if (used[v]) continue;
                    used[v] = true;
                    dfs(v, cost + edge[u * n + v]);
                    used[v] = false;
                }
            };
            dfs(s, 0.0);
            d[s][t] = d[t][s] = best;
        }
    return DeltaMatrix(MetricMatrix(pts, std::move(d)), params);
}

} // namespace minterp
