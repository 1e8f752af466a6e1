#include "minterp/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace minterp {

namespace {

void require_positive_scale(double t, const char* where) {
    if (!std::isfinite(t) || t <= 0.0)
        throw DomainError(std::string(where) + ": scale t must be a positive finite real");
}

/// Shortest-path distances from source over the admissible graph with
/// h_t weights; linear-scan label setting (the instances are small).
std::vector<double> km_from_source(const CompatiblePair& pair, double t, std::size_t source) {
    const auto& nodes = pair.union_labels();
    const std::size_t n = nodes.size();
    constexpr double kInf = std::numeric_limits<double>::infinity();

    std::vector<bool> is0(n), is1(n);
    for (std::size_t i = 0; i < n; ++i) {
        is0[i] = pair.in_x0(nodes[i]);
        is1[i] = pair.in_x1(nodes[i]);
    }

    std::vector<double> dist(n, kInf);
    std::vector<bool> settled(n, false);
    dist[source] = 0.0;
    for (std::size_t round = 0; round < n; ++round) {
        std::size_t u = n;
        double best = kInf;
        for (std::size_t i = 0; i < n; ++i)
            if (!settled[i] && dist[i] < best) {
                best = dist[i];
                u = i;
            }
        if (u == n) break;
        settled[u] = true;
        for (std::size_t v = 0; v < n; ++v) {
            if (settled[v]) continue;
            const bool both0 = is0[u] && is0[v];
            const bool both1 = is1[u] && is1[v];
            if (!both0 && !both1) continue;
            double w;
            if (both0 && both1)
                w = std::min(pair.d0().at(nodes[u], nodes[v]), t * pair.d1().at(nodes[u], nodes[v]));
            else if (both0)
                w = pair.d0().at(nodes[u], nodes[v]);
            else
                w = t * pair.d1().at(nodes[u], nodes[v]);
            if (dist[u] + w < dist[v]) dist[v] = dist[u] + w;
        }
    }
    return dist;
}

} // namespace

bool AdmissibleGraph::connected() const {
    if (nodes.empty()) return true;
    std::vector<std::vector<std::size_t>> adj(nodes.size());
    for (const auto& [i, j] : edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<bool> seen(nodes.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (const std::size_t v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

AdmissibleGraph admissible_graph(const CompatiblePair& pair) {
    AdmissibleGraph g;
    g.nodes = pair.union_labels();
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (std::size_t j = i + 1; j < g.nodes.size(); ++j) {
            const bool both0 = pair.in_x0(g.nodes[i]) && pair.in_x0(g.nodes[j]);
            const bool both1 = pair.in_x1(g.nodes[i]) && pair.in_x1(g.nodes[j]);
            if (both0 || both1) g.edges.emplace_back(i, j);
        }
    return g;
}

double h_cost(const CompatiblePair& pair, double t, const std::string& x, const std::string& y) {
    require_positive_scale(t, "h_cost");
    if (!pair.in_union(x)) throw DomainError("h_cost: point '" + x + "' not in X0 u X1");
    if (!pair.in_union(y)) throw DomainError("h_cost: point '" + y + "' not in X0 u X1");
    const bool both0 = pair.in_x0(x) && pair.in_x0(y);
    const bool both1 = pair.in_x1(x) && pair.in_x1(y);
    if (!both0 && !both1)
        throw DomainError("h_cost: (" + x + "," + y + ") is not an admissible step");
    if (both0 && both1) return std::min(pair.d0().at(x, y), t * pair.d1().at(x, y));
    if (both0) return pair.d0().at(x, y);
    return t * pair.d1().at(x, y);
}

double jm(const CompatiblePair& pair, double t, const std::string& x, const std::string& y) {
    require_positive_scale(t, "jm");
    if (!pair.in_intersection(x)) throw DomainError("jm: point '" + x + "' not in X0 n X1");
    if (!pair.in_intersection(y)) throw DomainError("jm: point '" + y + "' not in X0 n X1");
    return std::max(pair.d0().at(x, y), t * pair.d1().at(x, y));
}

double km(const CompatiblePair& pair, double t, const std::string& x, const std::string& y) {
    require_positive_scale(t, "km");
    const auto ix = pair.dx().index_of(x);
    const auto iy = pair.dx().index_of(y);
    if (!ix) throw DomainError("km: point '" + x + "' not in X0 u X1");
    if (!iy) throw DomainError("km: point '" + y + "' not in X0 u X1");
    const double d = km_from_source(pair, t, *ix)[*iy];
    if (!std::isfinite(d))
        throw InvariantViolation("km: admissible graph is disconnected despite nonempty intersection");
    return d;
}

std::vector<std::pair<int, double>> km_profile(const CompatiblePair& pair,
                                               const std::string& x, const std::string& y,
                                               int k_lo, int k_hi) {
    if (k_lo > k_hi) throw DomainError("km_profile: k_lo must not exceed k_hi");
    std::vector<std::pair<int, double>> out;
    out.reserve(static_cast<std::size_t>(k_hi - k_lo) + 1);
    for (int k = k_lo; k <= k_hi; ++k)
        out.emplace_back(k, km(pair, std::exp2(static_cast<double>(k)), x, y));
    return out;
}

MetricMatrix km_matrix(const CompatiblePair& pair, double t) {
    require_positive_scale(t, "km_matrix");
    const auto& nodes = pair.union_labels();
    std::vector<std::vector<double>> rows(nodes.size(), std::vector<double>(nodes.size(), 0.0));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto dist = km_from_source(pair, t, i);
        for (std::size_t j = 0; j < nodes.size(); ++j) rows[i][j] = dist[j];
    }
    return MetricMatrix(nodes, std::move(rows));
}

MetricMatrix jm_matrix(const CompatiblePair& pair, double t) {
    const auto& pts = pair.intersection_labels();
    std::vector<std::vector<double>> rows(pts.size(), std::vector<double>(pts.size(), 0.0));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            rows[i][j] = (i == j) ? 0.0 : jm(pair, t, pts[i], pts[j]);
    return MetricMatrix(pts, std::move(rows));
}

} // namespace minterp
