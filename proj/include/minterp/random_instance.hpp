#pragma once

#include <cstdint>

#include "minterp/instance_io.hpp"
#include "minterp/operators.hpp"

namespace minterp {

/// Deterministic 64-bit stream (splitmix64), independent of the standard
/// library's distribution implementations so that seeded runs reproduce
/// byte-identical reports across platforms and thread counts.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    double uniform();                       // [0, 1)
    double uniform(double lo, double hi);   // [lo, hi)
    int uniform_int(int lo, int hi);        // inclusive range

    /// Independent stream for a subtask; mixing is stable.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream);

private:
    std::uint64_t state_;
};

struct GenOptions {
    int min_points = 2;
    int max_points = 8;
    int min_intersection = 1;
    int max_intersection = 1 << 20;
    bool trivial_pair = false;     // X0 = X1 = points with d0 = d1 = dX
    double min_separation = 1e-3;  // keeps certified windows small
};

/// Random valid instance: points in the unit square, each metric a
/// Euclidean table scaled by its own factor in [0.5, 2], with the ambient
/// factor shrunk below both so compatibility holds at C0 = C1 = 1. All
/// metric axioms hold by construction.
Instance random_instance(std::uint64_t seed, const GenOptions& opts = {});

/// Random admissible operator between two pairs: X0 points land in Y0,
/// X1 points in Y1, intersection points in the codomain intersection.
PointMap random_admissible_map(std::uint64_t seed, const CompatiblePair& dom, const CompatiblePair& cod);

/// Random endomap contracting on both restrictions (omega0, omega1 < 1):
/// tries sparse-image maps and falls back toward a constant map, which
/// always contracts. Deterministic per seed.
PointMap random_contraction_map(std::uint64_t seed, const CompatiblePair& pair);

} // namespace minterp
