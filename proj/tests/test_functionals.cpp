#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "minterp/functionals.hpp"
#include "minterp/oracle.hpp"
#include "minterp/random_instance.hpp"

using namespace minterp;
using namespace minterp::testing;

TEST_CASE("h_cost branches") {
    const auto pair1 = e1();
    CHECK(h_cost(pair1, 0.5, "a", "b") == doctest::Approx(1.5)); // min{2, 0.5*3}
    CHECK(h_cost(pair1, 10.0, "a", "b") == doctest::Approx(2.0));
    CHECK(h_cost(pair1, 1.0, "a", "a") == 0.0);

    const auto pair3 = e3();
    CHECK(h_cost(pair3, 2.0, "a", "m") == doctest::Approx(1.0)); // pair lies in X0^2 only
    CHECK(h_cost(pair3, 2.0, "m", "b") == doctest::Approx(4.0)); // t*d1 on the X1 side
    CHECK_THROWS_AS(h_cost(pair3, 1.0, "a", "b"), DomainError);  // mixed pair, not a step
    CHECK_THROWS_AS(h_cost(pair1, -1.0, "a", "b"), DomainError);
}

TEST_CASE("jm values and domain") {
    const auto pair = e1();
    CHECK(jm(pair, 1.0, "a", "b") == doctest::Approx(3.0));
    CHECK(jm(pair, 0.5, "a", "b") == doctest::Approx(2.0));
    CHECK(jm(pair, 1.0, "a", "a") == 0.0);
    CHECK_THROWS_AS(jm(e3(), 1.0, "a", "m"), DomainError); // a is outside the intersection
}

TEST_CASE("km on E3 routes through the shared point") {
    const auto pair = e3();
    CHECK(km(pair, 1.0, "a", "b") == doctest::Approx(3.0));
    CHECK(km(pair, 1.0, "a", "b") ==
          doctest::Approx(km_bruteforce(pair, 1.0, "a", "b")));
    CHECK_THROWS_AS(km(pair, 1.0, "z", "b"), DomainError);
}

TEST_CASE("km on E1 equals the direct step") {
    CHECK(km(e1(), 0.5, "a", "b") == doctest::Approx(1.5));
}

TEST_CASE("km on a trivial pair reproduces the ambient metric") {
    const auto pair = trivial3();
    for (const auto& x : pair.union_labels())
        for (const auto& y : pair.union_labels())
            CHECK(km(pair, 1.0, x, y) == pair.dx().at(x, y));
}

TEST_CASE("km_profile: closed form on E1, zeros on the diagonal, constant on trivial pairs") {
    const auto profile = km_profile(e1(), "a", "b", -2, 2);
    const std::vector<double> expected = {0.75, 1.5, 2.0, 2.0, 2.0}; // min{2, 3*2^k}
    REQUIRE(profile.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(profile[i].first == -2 + static_cast<int>(i));
        CHECK(profile[i].second == doctest::Approx(expected[i]));
    }
    for (const auto& [k, v] : km_profile(e1(), "a", "a", -3, 3)) {
        (void)k;
        CHECK(v == 0.0);
    }
    for (const auto& [k, v] : km_profile(trivial3(), "a", "b", 0, 4)) {
        (void)k;
        CHECK(v == doctest::Approx(2.0)); // constant dX above scale 1
    }
    for (const auto& [k, v] : km_profile(trivial3(), "a", "b", -3, -1))
        CHECK(v == doctest::Approx(std::exp2(k) * 2.0)); // capped by min{1,2^k} dX below it
    CHECK_THROWS_AS(km_profile(e1(), "a", "b", 2, -2), DomainError);
}

TEST_CASE("km_profile is nondecreasing in the scale index") {
    // h_t is nondecreasing in t, so every path cost and hence the
    // shortest-path value grows with the scale.
    Rng rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        const auto pair = random_instance(rng.next(), GenOptions{2, 7}).to_pair();
        const auto& nodes = pair.union_labels();
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                const auto profile = km_profile(pair, nodes[i], nodes[j], -6, 6);
                for (std::size_t k = 1; k < profile.size(); ++k)
                    CHECK(profile[k - 1].second <= profile[k].second + 1e-15);
            }
    }
}

TEST_CASE("admissible graph shape and connectivity") {
    const auto g3 = admissible_graph(e3());
    CHECK(g3.nodes == std::vector<std::string>{"a", "m", "b"});
    CHECK(g3.edges.size() == 2); // a-m and m-b; a-b is mixed
    CHECK(g3.connected());

    Rng rng(11);
    for (int trial = 0; trial < 25; ++trial)
        CHECK(admissible_graph(random_instance(rng.next(), GenOptions{}).to_pair()).connected());
}

TEST_CASE("km and jm satisfy the metric axioms on random instances") {
    Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const auto pair = random_instance(rng.next(), GenOptions{2, 8}).to_pair();
        for (const double t : {0.25, 1.0, 4.0}) {
            CHECK(km_matrix(pair, t).validate(1e-9).ok());
            CHECK(jm_matrix(pair, t).validate(1e-9).ok());
        }
    }
}

TEST_CASE("scale comparison and cross bounds hold on random instances") {
    Rng rng(47);
    for (int trial = 0; trial < 25; ++trial) {
        const auto pair = random_instance(rng.next(), GenOptions{2, 7}).to_pair();
        for (int rep = 0; rep < 8; ++rep) {
            const double a = std::exp2(rng.uniform(-3.0, 3.0));
            const double b = (rep % 2 == 0) ? std::exp2(static_cast<double>(rng.uniform_int(-3, 3)))
                                            : std::exp2(rng.uniform(-3.0, 3.0));
            const auto& nodes = pair.union_labels();
            for (std::size_t i = 0; i < nodes.size(); ++i)
                for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                    const double ka = km(pair, a, nodes[i], nodes[j]);
                    const double kb = km(pair, b, nodes[i], nodes[j]);
                    CHECK(ka <= std::max(1.0, a / b) * kb + 1e-9);
                }
            const auto& inter = pair.intersection_labels();
            for (std::size_t i = 0; i < inter.size(); ++i)
                for (std::size_t j = i + 1; j < inter.size(); ++j) {
                    const double ja = jm(pair, a, inter[i], inter[j]);
                    const double jb = jm(pair, b, inter[i], inter[j]);
                    CHECK(ja <= std::max(1.0, a / b) * jb + 1e-9);
                    CHECK(km(pair, a, inter[i], inter[j]) <= std::min(1.0, a / b) * jb + 1e-9);
                }
        }
    }
}

TEST_CASE("km agrees with exhaustive path enumeration on small instances") {
    Rng rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const auto pair = random_instance(rng.next(), GenOptions{2, 6}).to_pair();
        const auto& nodes = pair.union_labels();
        for (const double t : {0.25, 0.5, 1.0, 2.0, 4.0})
            for (std::size_t i = 0; i < nodes.size(); ++i)
                for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                    const double fast = km(pair, t, nodes[i], nodes[j]);
                    const double slow = km_bruteforce(pair, t, nodes[i], nodes[j]);
                    CHECK(std::abs(fast - slow) <= 1e-12);
                }
    }
}
