#include <cmath>
#include <random>

#include "doctest.h"
#include "linfpt/series.hpp"

using namespace linfpt;

namespace {

// Brute-force oracle: straight 500-term sum of the same series definition,
// written independently of the compensated incremental path.
double brute_force_limit(const PartialSumSeries& s, int terms = 500) {
    long double acc = s.leading();
    for (int k = 1; k <= terms; ++k) acc += s.term(k);
    return static_cast<double>(acc);
}

}  // namespace

TEST_CASE("Boundary rejects nonpositive coefficients") {
    CHECK_THROWS_AS(Boundary(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Boundary(1.0, -1.0), std::invalid_argument);
    CHECK_NOTHROW(Boundary(1e-3, 1e-3));
}

TEST_CASE("c_partial matches hand values") {
    Boundary b(1.0, 1.0);
    CHECK(c_partial(b, 0) == 0.0);
    CHECK(c_partial(b, 1) == doctest::Approx(2.0 * std::exp(-2.0)).epsilon(1e-14));
    // 50-term cross-check of the 3-term value
    CHECK(c_partial(b, 3) == doctest::Approx(0.2699996716773798).epsilon(1e-12));
    CHECK(c_partial(b, 50) == doctest::Approx(0.2699996716773545).epsilon(1e-12));
}

TEST_CASE("c_partial stays inside its a-priori bounds") {
    for (double a : {0.1, 0.5, 1.0, 3.0}) {
        for (double b : {0.1, 1.0, 2.0}) {
            Boundary bd(a, b);
            for (int n = 1; n <= 20; ++n) {
                const double v = c_partial(bd, n);
                CHECK(v >= 0.0);
                CHECK(v <= 2.0 * std::exp(-2.0 * a * b) + 1e-15);
            }
        }
    }
}

TEST_CASE("q_partial leading term") {
    CHECK(q_partial(Boundary(1.0, 1.0), 1.0, 0) == 0.0);  // a - bt = 0
    const double expect = 0.5 / std::sqrt(2.0 * M_PI) * std::exp(-1.125);
    CHECK(q_partial(Boundary(1.0, 0.5), 1.0, 0) ==
          doctest::Approx(expect).epsilon(1e-13));
    CHECK_THROWS_AS(q_partial(Boundary(1.0, 1.0), 0.0, 0),
                    std::invalid_argument);
}

TEST_CASE("q_partial converges to the CDF-derivative value") {
    // frozen from a central finite difference of the Theorem-style CDF
    CHECK(q_partial(Boundary(1.0, 1.0), 1.0, 50) ==
          doctest::Approx(0.10787326133770136).epsilon(1e-10));
}

TEST_CASE("scaled and unscaled density series agree") {
    Boundary b(0.7, 1.3);
    for (double t : {0.2, 1.0, 4.0}) {
        auto plain = PartialSumSeries::density_q(b, t);
        auto scaled = PartialSumSeries::density_q_scaled(b, t);
        const double v = scaled.partial(20) * std::exp(scaled.log_scale());
        CHECK(plain.partial(20) == doctest::Approx(v).epsilon(1e-12));
    }
}

TEST_CASE("tail indices") {
    CHECK(tail_index_c() == 1);
    CHECK(tail_index_q(Boundary(1, 1), 1.0) == 2);
    CHECK(tail_index_q(Boundary(1, 1), 10.0) == 6);
    CHECK(tail_index_q(Boundary(0.1, 0.1), 1.0) == 46);
    CHECK_THROWS_AS(tail_index_q(Boundary(1, 1), 0.0), std::invalid_argument);
}

TEST_CASE("decide_compare on the normalizer") {
    auto s11 = PartialSumSeries::normalizer(Boundary(1, 1));
    CHECK(decide_compare(s11, 0.5) == CompareOutcome::Less);
    CHECK(decide_compare(s11, 0.1) == CompareOutcome::Greater);
    auto s55 = PartialSumSeries::normalizer(Boundary(0.5, 0.5));
    CHECK(decide_compare(s55, 0.9) == CompareOutcome::Greater);
}

TEST_CASE("decide_compare raises on an unreachable threshold") {
    auto s = PartialSumSeries::normalizer(Boundary(1, 1));
    const double limit = brute_force_limit(s);
    CHECK_THROWS_AS(decide_compare(s, limit), UnresolvedComparison);
    DecideOptions opts;
    opts.unresolved_as_less = true;
    const auto r = decide_compare_detail(s, limit, opts);
    CHECK(r.unresolved_mapped);
    CHECK(r.outcome == CompareOutcome::Less);
}

TEST_CASE("oscillation_ratio hand values") {
    auto s = PartialSumSeries::normalizer(Boundary(1, 1));
    CHECK(oscillation_ratio(s, 1) ==
          doctest::Approx(-std::exp(-6.0)).epsilon(1e-12));
    CHECK(oscillation_ratio(s, 2) ==
          doctest::Approx(-std::exp(-10.0)).epsilon(1e-12));
    auto q = PartialSumSeries::density_q(Boundary(1, 1), 1.0);
    const double r = oscillation_ratio(q, 2);
    CHECK(r > -1.0);
    CHECK(r < 0.0);
}

TEST_CASE("oscillation_ratio degenerate difference") {
    auto s = PartialSumSeries::normalizer(Boundary(5, 5));
    // terms underflow to zero well before k = 30
    CHECK_THROWS_AS(oscillation_ratio(s, 30), DegenerateDifference);
}

TEST_CASE("property: oscillation ratio in (-1,0) past the tail index") {
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> coef(0.05, 5.0);
    std::uniform_real_distribution<double> time(1e-3, 20.0);
    for (int rep = 0; rep < 40; ++rep) {
        Boundary b(coef(gen), coef(gen));
        auto nz = PartialSumSeries::normalizer(b);
        for (int n = nz.tail_index(); n <= nz.tail_index() + 50; ++n) {
            double r;
            try {
                r = oscillation_ratio(nz, n);
            } catch (const DegenerateDifference&) {
                break;  // differences underflowed; nothing left to check
            }
            if (r == 0.0) break;  // next difference underflowed
            CHECK(r > -1.0);
            CHECK(r < 0.0);
        }
        const double t = time(gen);
        auto q = PartialSumSeries::density_q_scaled(b, t);
        for (int n = q.tail_index(); n <= q.tail_index() + 50; ++n) {
            double r;
            try {
                r = oscillation_ratio(q, n);
            } catch (const DegenerateDifference&) {
                break;
            }
            if (r == 0.0) break;  // next difference underflowed
            CHECK(r > -1.0);
            CHECK(r < 0.0);
        }
    }
}

TEST_CASE("property: consecutive partial sums bracket all later ones") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> coef(0.05, 5.0);
    std::uniform_real_distribution<double> time(1e-2, 20.0);
    for (int rep = 0; rep < 25; ++rep) {
        Boundary b(coef(gen), coef(gen));
        auto q = PartialSumSeries::density_q_scaled(b, time(gen));
        const int k = q.tail_index();
        const double sk = q.partial(k);
        const double sk1 = q.partial(k + 1);
        const double lo = std::min(sk, sk1) - 1e-13 * (1.0 + std::abs(sk));
        const double hi = std::max(sk, sk1) + 1e-13 * (1.0 + std::abs(sk));
        for (int m = k; m <= k + 100; m += 7) {
            const double sm = q.partial(m);
            CHECK(sm >= lo);
            CHECK(sm <= hi);
        }
    }
}

TEST_CASE("property: decide_compare agrees with the brute-force sign") {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> coef(0.05, 5.0);
    std::uniform_real_distribution<double> time(1e-2, 20.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    int checked = 0;
    for (int rep = 0; rep < 400; ++rep) {
        Boundary b(coef(gen), coef(gen));
        const bool use_density = rep % 2 == 0;
        auto s = use_density
                     ? PartialSumSeries::density_q_scaled(b, time(gen))
                     : PartialSumSeries::normalizer(b);
        const double limit = brute_force_limit(s);
        const double span = std::max(1.0, std::abs(limit));
        const double thr = limit + span * (unif(gen) - 0.5);
        if (std::abs(limit - thr) <= 1e-9) continue;
        const auto out = decide_compare(s, thr);
        CHECK(out == (limit > thr ? CompareOutcome::Greater
                                  : CompareOutcome::Less));
        ++checked;
    }
    CHECK(checked > 300);
}

TEST_CASE("property: density series brackets a nonnegative limit") {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> coef(0.05, 5.0);
    std::uniform_real_distribution<double> time(1e-2, 20.0);
    for (int rep = 0; rep < 50; ++rep) {
        Boundary b(coef(gen), coef(gen));
        auto q = PartialSumSeries::density_q_scaled(b, time(gen));
        const int k = q.tail_index() + 30;
        const double hi = std::max(q.partial(k), q.partial(k + 1));
        CHECK(hi >= -1e-12);
    }
}

TEST_CASE("normalizer term magnitudes decay monotonically") {
    auto s = PartialSumSeries::normalizer(Boundary(0.1, 0.3));
    double prev = std::abs(s.term(1));
    for (int k = 2; k <= 40; ++k) {
        const double cur = std::abs(s.term(k));
        CHECK(cur <= prev);
        prev = cur;
    }
}
