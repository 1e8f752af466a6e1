#include "minterp/random_instance.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace minterp {

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Rng::uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::uint64_t Rng::mix(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0x632be59bd9b4e019ULL + 0x9e3779b97f4a7c15ULL * stream));
    return r.next();
}

namespace {

struct Point {
    double x, y;
};

double dist(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

std::vector<Point> sample_separated_points(Rng& rng, int n, double min_separation) {
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
        const Point cand{rng.uniform(), rng.uniform()};
        const bool ok = std::all_of(pts.begin(), pts.end(),
                                    [&](const Point& p) { return dist(p, cand) >= min_separation; });
        if (ok) pts.push_back(cand);
    }
    return pts;
}

std::vector<std::vector<double>> scaled_euclid(const std::vector<Point>& pts,
                                               const std::vector<int>& subset, double factor) {
    std::vector<std::vector<double>> rows(subset.size(), std::vector<double>(subset.size(), 0.0));
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = 0; j < subset.size(); ++j)
            rows[i][j] = (i == j) ? 0.0 : factor * dist(pts[subset[i]], pts[subset[j]]);
    return rows;
}

} // namespace

Instance random_instance(std::uint64_t seed, const GenOptions& opts) {
    Rng rng(seed);
    const int n = rng.uniform_int(opts.min_points, opts.max_points);
    const auto coords = sample_separated_points(rng, n, opts.min_separation);

    Instance inst;
    for (int i = 0; i < n; ++i) inst.points.push_back("p" + std::to_string(i));

    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;

    if (opts.trivial_pair) {
        const double alpha = rng.uniform(0.5, 2.0);
        inst.x0 = inst.points;
        inst.x1 = inst.points;
        inst.d0 = scaled_euclid(coords, all, alpha);
        inst.d1 = inst.d0;
        inst.dx = inst.d0;
        return inst;
    }

    const double alpha0 = rng.uniform(0.5, 2.0);
    const double alpha1 = rng.uniform(0.5, 2.0);
    const double alphax = std::min({rng.uniform(0.5, 2.0), alpha0, alpha1});

    // 0 = both, 1 = only X0, 2 = only X1; every point lands somewhere.
    std::vector<int> category(n);
    for (int i = 0; i < n; ++i) {
        const double r = rng.uniform();
        category[i] = (r < 0.4) ? 0 : (r < 0.7 ? 1 : 2);
    }
    int both = static_cast<int>(std::count(category.begin(), category.end(), 0));
    for (int i = 0; i < n && both < std::min(opts.min_intersection, n); ++i)
        if (category[i] != 0) {
            category[i] = 0;
            ++both;
        }
    bool demote_to_x0 = true; // alternate sides so neither subset collapses
    for (int i = 0; i < n && both > opts.max_intersection; ++i)
        if (category[i] == 0) {
            category[i] = demote_to_x0 ? 1 : 2;
            demote_to_x0 = !demote_to_x0;
            --both;
        }

    std::vector<int> sub0, sub1;
    for (int i = 0; i < n; ++i) {
        if (category[i] != 2) sub0.push_back(i);
        if (category[i] != 1) sub1.push_back(i);
    }
    for (const int i : sub0) inst.x0.push_back(inst.points[static_cast<std::size_t>(i)]);
    for (const int i : sub1) inst.x1.push_back(inst.points[static_cast<std::size_t>(i)]);
    inst.d0 = scaled_euclid(coords, sub0, alpha0);
    inst.d1 = scaled_euclid(coords, sub1, alpha1);
    inst.dx = scaled_euclid(coords, all, alphax);
    return inst;
}

PointMap random_admissible_map(std::uint64_t seed, const CompatiblePair& dom, const CompatiblePair& cod) {
    Rng rng(seed);
    std::vector<std::string> y_both, y_only0, y_only1;
    for (const auto& p : cod.union_labels()) {
        if (cod.in_intersection(p))
            y_both.push_back(p);
        else if (cod.in_x0(p))
            y_only0.push_back(p);
        else
            y_only1.push_back(p);
    }
    std::vector<std::string> y0 = y_both, y1 = y_both;
    y0.insert(y0.end(), y_only0.begin(), y_only0.end());
    y1.insert(y1.end(), y_only1.begin(), y_only1.end());

    PointMap map;
    for (const auto& x : dom.union_labels()) {
        const auto& pool = dom.in_intersection(x) ? y_both : (dom.in_x0(x) ? y0 : y1);
        map[x] = pool[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(pool.size()) - 1))];
    }
    return map;
}

PointMap random_contraction_map(std::uint64_t seed, const CompatiblePair& pair) {
    Rng rng(seed);
    const auto& inter = pair.intersection_labels();
    const auto& anchor = inter[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(inter.size()) - 1))];

    for (int attempt = 0; attempt < 24; ++attempt) {
        // Shrinking probability of straying from the anchor; attempt 23 is
        // the constant map, which contracts unconditionally.
        const double stray = 0.5 * (23 - attempt) / 23.0;
        PointMap map;
        for (const auto& x : pair.union_labels()) {
            if (rng.uniform() < stray) {
                const auto& pool =
                    pair.in_intersection(x) ? inter : (pair.in_x0(x) ? pair.x0_labels() : pair.x1_labels());
                map[x] = pool[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(pool.size()) - 1))];
            } else {
                map[x] = anchor;
            }
        }
        const double w0 = lipschitz_constant(map, pair.d0(), pair.d0());
        const double w1 = lipschitz_constant(map, pair.d1(), pair.d1());
        if (w0 < 1.0 && w1 < 1.0) return map;
    }
    PointMap constant;
    for (const auto& x : pair.union_labels()) constant[x] = anchor;
    return constant;
}

} // namespace minterp
