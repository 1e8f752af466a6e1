#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "minterp/random_instance.hpp"
#include "minterp/seqnorm.hpp"

using namespace minterp;
using namespace minterp::testing;

TEST_CASE("gamma: zero sequence with zero tails is exactly [0,0]") {
    const InterpParams params(0.5, 2.0);
    WindowedSequence seq;
    seq.k_lo = -3;
    seq.k_hi = 3;
    seq.values.assign(7, 0.0);
    const auto v = gamma(params, seq);
    CHECK(v.lower == 0.0);
    CHECK(v.upper == 0.0);
}

TEST_CASE("gamma of min{1,2^k} at theta=1/2, q=2 is sqrt(3)") {
    const InterpParams params(0.5, 2.0);
    const auto v = gamma(params, min_one_2k_window(params, 40));
    CHECK(v.lower <= std::sqrt(3.0));
    CHECK(v.upper >= std::sqrt(3.0));
    CHECK(v.width() <= 1e-12);
    CHECK(v.midpoint() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    // Independent wide-window sweep, no tail certificates.
    const double swept = gamma_wide_sweep(params, [](int k) { return std::min(1.0, std::exp2(k)); });
    CHECK(swept == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("gamma of min{1,2^k} at q=inf is 1, attained at k=0") {
    for (const double theta : {0.2, 0.5, 0.8}) {
        const InterpParams params(theta, kInfiniteExponent);
        const auto v = gamma(params, min_one_2k_window(params, 40));
        CHECK(v.lower == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(v.upper == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("gamma rejects bad windows and tails") {
    const InterpParams params(0.5, 2.0);
    WindowedSequence seq;
    seq.k_lo = 2;
    seq.k_hi = 1;
    CHECK_THROWS_AS(gamma(params, seq), DomainError);
    seq.k_lo = 0;
    seq.k_hi = 0;
    seq.values = {1.0};
    seq.tail_lo = -0.5;
    CHECK_THROWS_AS(gamma(params, seq), DomainError);
}

TEST_CASE("gamma is homogeneous and monotone") {
    const InterpParams params(0.4, 3.0);
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        WindowedSequence seq;
        seq.k_lo = -5;
        seq.k_hi = 5;
        for (int k = 0; k < 11; ++k) seq.values.push_back(rng.uniform());
        seq.tail_lo = rng.uniform();
        seq.tail_hi = rng.uniform();

        const double c = rng.uniform(0.0, 3.0);
        WindowedSequence scaled = seq;
        for (auto& v : scaled.values) v *= c;
        const double tail_factor = std::pow(c, params.q());
        scaled.tail_lo *= tail_factor;
        scaled.tail_hi *= tail_factor;
        const auto base = gamma(params, seq);
        const auto big = gamma(params, scaled);
        CHECK(big.lower == doctest::Approx(c * base.lower).epsilon(1e-12));
        CHECK(big.upper == doctest::Approx(c * base.upper).epsilon(1e-12));

        WindowedSequence larger = seq;
        for (auto& v : larger.values) v += rng.uniform();
        const auto bigger = gamma(params, larger);
        CHECK(base.lower <= bigger.lower + 1e-15);
        CHECK(base.upper <= bigger.upper + 1e-15);
    }
}

TEST_CASE("m_gamma closed forms: sqrt(3) pin, q=inf, q=1 vs window sweep") {
    CHECK(m_gamma(InterpParams(0.5, 2.0)) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(m_gamma(InterpParams(0.123, kInfiniteExponent)) == 1.0);
    CHECK(m_gamma(InterpParams(0.9, kInfiniteExponent)) == 1.0);

    const InterpParams q1(0.5, 1.0);
    const double swept = gamma_wide_sweep(q1, [](int k) { return std::min(1.0, std::exp2(k)); });
    CHECK(m_gamma(q1) == doctest::Approx(swept).epsilon(1e-12));
}

TEST_CASE("m_gamma and m_holder agree with direct summation on a grid") {
    for (const double theta : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9})
        for (const double q : {1.0, 2.0, kInfiniteExponent}) {
            const InterpParams params(theta, q);
            const double direct = gamma_wide_sweep(params, [](int k) { return std::min(1.0, std::exp2(k)); });
            CHECK(m_gamma(params) == doctest::Approx(direct).epsilon(1e-10));
            // m_holder(theta, q) is the Gamma value of min{1,2^k} at (1-theta, p).
            const InterpParams mirrored(1.0 - theta, params.p());
            const double direct_h =
                gamma_wide_sweep(mirrored, [](int k) { return std::min(1.0, std::exp2(k)); });
            CHECK(m_holder(params) == doctest::Approx(direct_h).epsilon(1e-10));
        }
}

TEST_CASE("m_holder: q=1 gives the supremum form, theta=1/2 q=2 matches m_gamma") {
    CHECK(m_holder(InterpParams(0.37, 1.0)) == 1.0);
    CHECK(m_holder(InterpParams(0.5, 2.0)) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    Rng rng(123);
    for (int trial = 0; trial < 20; ++trial) {
        const double theta = rng.uniform(0.05, 0.95);
        const double q = 1.0 + rng.uniform(0.0, 5.0);
        const InterpParams params(theta, q);
        const InterpParams mirrored(1.0 - theta, params.p());
        CHECK(m_holder(params) == doctest::Approx(m_gamma(mirrored)).epsilon(1e-12));
    }
}

TEST_CASE("reindex bound: identity case has zero slack against C=1") {
    const InterpParams params(0.5, 2.0);
    WindowedSequence b;
    b.k_lo = -1;
    b.k_hi = 1;
    b.values = {1.0, 2.0, 0.5};
    const auto rep = reindex_bound_check(b, b, 1.0, 1.0, params);
    CHECK(rep.dyadic);
    CHECK(rep.shift == 0);
    CHECK(rep.c_theta == 1.0);
    CHECK(rep.holds);
    CHECK(rep.slack == doctest::Approx(0.0));
}

TEST_CASE("reindex bound: dyadic ratio 2 attains the 2^{1-theta} factor") {
    for (const double theta : {0.25, 0.5, 0.75})
        for (const double q : {1.0, 2.0, kInfiniteExponent}) {
            const InterpParams params(theta, q);
            WindowedSequence b;
            b.k_lo = 0;
            b.k_hi = 2;
            b.values = {1.0, 3.0, 2.0};
            WindowedSequence a = b;
            for (auto& v : a.values) v *= 2.0;
            const auto rep = reindex_bound_check(a, b, 2.0, 1.0, params);
            CHECK(rep.dyadic);
            CHECK(rep.shift == 1);
            CHECK(rep.holds);
            // lhs = 2^{-theta} * 2 * ||b|| and rhs = 2^{1-theta} * ||b||: equality.
            CHECK(rep.slack == doctest::Approx(0.0).epsilon(1e-12));
        }
}

TEST_CASE("reindex bound: non-dyadic ratios stay within the 2^theta cushion") {
    Rng rng(7);
    for (const double theta : {0.1, 0.3, 0.5, 0.7, 0.9})
        for (const double q : {1.0, 2.0, kInfiniteExponent}) {
            const InterpParams params(theta, q);
            WindowedSequence b;
            b.k_lo = -2;
            b.k_hi = 2;
            for (int k = 0; k < 5; ++k) b.values.push_back(rng.uniform(0.1, 2.0));
            WindowedSequence a = b;
            for (auto& v : a.values) v *= 3.0;
            const auto rep = reindex_bound_check(a, b, 3.0, 2.0, params);
            CHECK_FALSE(rep.dyadic);
            CHECK(rep.c_theta == doctest::Approx(std::exp2(theta)));
            CHECK(rep.holds);
        }
}

TEST_CASE("reindex bound: violated hypothesis names the offending index") {
    const InterpParams params(0.5, 2.0);
    WindowedSequence b;
    b.k_lo = 0;
    b.k_hi = 1;
    b.values = {1.0, 1.0};
    WindowedSequence a = b;
    a.values[1] = 5.0; // a_1 > omega0 * b_1 for omega0 = 2
    CHECK_THROWS_WITH_AS(reindex_bound_check(a, b, 2.0, 1.0, params),
                         doctest::Contains("k=1"), PreconditionError);
}

TEST_CASE("reindex bound never fails when the hypothesis holds (fuzz)") {
    Rng rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        const double theta = rng.uniform(0.05, 0.95);
        const double q = (trial % 3 == 0) ? kInfiniteExponent : 1.0 + rng.uniform(0.0, 4.0);
        const InterpParams params(theta, q);
        const double w0 = rng.uniform(0.2, 5.0);
        const double w1 = rng.uniform(0.2, 5.0);
        WindowedSequence b;
        b.k_lo = rng.uniform_int(-4, 0);
        b.k_hi = b.k_lo + rng.uniform_int(1, 5);
        WindowedSequence a = b;
        for (int k = b.k_lo; k <= b.k_hi; ++k) {
            const double bv = rng.uniform(0.01, 3.0);
            b.values.push_back(bv);
            a.values.push_back(bv * w0 * rng.uniform()); // a_k <= omega0 * b_k by construction
        }
        const auto rep = reindex_bound_check(a, b, w0, w1, params);
        CHECK(rep.holds);
    }
}
