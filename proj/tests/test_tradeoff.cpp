#include <algorithm>
#include <cmath>
#include <doctest.h>

#include "coopic/tradeoff.hpp"
#include "test_util.hpp"

using namespace coopic;
using namespace coopic::testutil;

TEST_CASE("even-K trade-off curve") {
    CHECK(tradeoff_even(2, 1, 1.0) == doctest::Approx(1.0));
    CHECK(tradeoff_even(4, 1, 0.0) == doctest::Approx(0.5));
    CHECK(tradeoff_even(4, 2, 3.0) == doctest::Approx(2.0));  // zero-forcing corner
    CHECK_THROWS_AS(tradeoff_even(3, 1, 0.0), OddK);
    CHECK_THROWS_AS(tradeoff_even(2, 1, -1.0), InvalidArgument);
}

TEST_CASE("odd-K trade-off bounds") {
    const OddBounds at_zero = tradeoff_odd(3, 1, 0.0);
    CHECK(at_zero.lower == doctest::Approx(0.5));
    CHECK(at_zero.upper == doctest::Approx(2.0 / 3.0));

    const OddBounds at_one = tradeoff_odd(3, 1, 1.0);
    CHECK(at_one.lower == doctest::Approx(7.0 / 8.0));
    CHECK(at_one.upper == doctest::Approx(1.0));

    CHECK(tradeoff_odd(3, 1, 4.0 / 3.0).lower == doctest::Approx(1.0));
    CHECK_THROWS_AS(tradeoff_odd(4, 1, 0.0), EvenK);
    CHECK_THROWS_AS(tradeoff_odd(1, 1, 0.0), EvenK);
}

TEST_CASE("asymptotic curve") {
    CHECK(tradeoff_asymptotic(1, 0.0) == doctest::Approx(0.5));
    CHECK(tradeoff_asymptotic(1, 2.0) == doctest::Approx(1.0));
    CHECK(tradeoff_asymptotic(3, 2.0) == doctest::Approx(2.0));
}

TEST_CASE("minimum load for full DoF and its gap to the centralized scheme") {
    CHECK(alpha_min_converse(3, 1) == doctest::Approx(1.0));
    CHECK(alpha_min_converse(2, 1) == doctest::Approx(2.0 / 3.0));
    for (int K : {2, 3, 5, 8}) {
        for (int M : {1, 2}) {
            const double scheme_load = 2.0 * M * (K - 1) / K;
            const double gap = scheme_load - alpha_min_converse(K, M);
            CHECK(gap == doctest::Approx(2.0 * M * (K - 1) / (K * (K + 1))));
        }
    }
}

TEST_CASE("two-user region bounds") {
    const auto [b1, b2] = two_user_region_bounds(make_two_user_config(3, 2, 1, 2, 0.0, 0.0));
    CHECK(b1 == doctest::Approx(3.0));

    const auto symmetric = two_user_region_bounds(make_two_user_config(1, 1, 1, 1, 0.0, 0.0));
    CHECK(symmetric.first == doctest::Approx(1.0));
    CHECK(symmetric.second == doctest::Approx(1.0));

    const auto with_coop = two_user_region_bounds(make_two_user_config(1, 1, 1, 1, 0.0, 2.0));
    CHECK(with_coop.second == doctest::Approx(3.0));
}

TEST_CASE("two-user trade-off") {
    CHECK(two_user_tradeoff(1, 2, 0.0) == doctest::Approx(1.0));
    CHECK(two_user_tradeoff(1, 2, 1.0) == doctest::Approx(1.5));
    for (int M : {1, 2, 3}) CHECK(two_user_tradeoff(M, M, 0.0) == doctest::Approx(M / 2.0));
}

TEST_CASE("K=2 consistency between the general curve and the two-user formula") {
    for (double alpha : {0.0, 0.3, 0.7, 1.0, 1.5, 3.0})
        for (int M : {1, 2, 3})
            CHECK(tradeoff_even(2, M, alpha) == doctest::Approx(two_user_tradeoff(M, M, alpha)));
}

TEST_CASE("two-user trade-off equals the averaged region bounds under the antenna cap") {
    rng::Stream stream(2024);
    for (int n = 0; n < 200; ++n) {
        const int M1 = 1 + static_cast<int>(stream.below(4));
        const int M2 = 1 + static_cast<int>(stream.below(4));
        const double c12 = 3.0 * stream.uniform01();
        const double c21 = 3.0 * stream.uniform01();
        const auto [b1, b2] =
            two_user_region_bounds(make_two_user_config(M1, M1, M2, M2, c12, c21));
        const double per_user = two_user_tradeoff(M1, M2, 0.5 * (c12 + c21));
        CHECK(2.0 * per_user ==
              doctest::Approx(std::min<double>(M1 + M2, 0.5 * (b1 + b2))).epsilon(1e-12));
    }
}

TEST_CASE("partition bound examples") {
    CHECK(partition_bound(4, 1, uniform_backhaul(4, 0.25), {0, 1}) == doctest::Approx(2.0 + 4 * 0.25));
    CHECK(partition_bound(3, 1, uniform_backhaul(3, 0.5), {0}) == doctest::Approx(2.0 + 2 * 0.5));
    CHECK(partition_bound(2, 1, make_backhaul(2, {}), {0}) == doctest::Approx(1.0));

    CHECK_THROWS_AS(partition_bound(3, 1, uniform_backhaul(3, 1.0), {}), EmptyPartition);
    CHECK_THROWS_AS(partition_bound(3, 1, uniform_backhaul(3, 1.0), {0, 1, 2}), EmptyPartition);
    CHECK_THROWS_AS(partition_bound(3, 1, uniform_backhaul(3, 1.0), {0, 0}), InvalidArgument);
}

TEST_CASE("enumerated converse collapses to the closed forms for uniform capacity") {
    for (int K = 2; K <= 10; K += 2) {
        for (double c : {0.0, 0.1, 0.4, 1.0}) {
            const double alpha = (K - 1) * c;
            CHECK(converse_enumerate(K, 1, uniform_backhaul(K, c)) ==
                  doctest::Approx(tradeoff_even(K, 1, alpha)).epsilon(1e-12));
        }
    }
    for (int K = 3; K <= 9; K += 2) {
        for (double c : {0.0, 0.1, 0.4, 1.0}) {
            const double alpha = (K - 1) * c;
            CHECK(converse_enumerate(K, 1, uniform_backhaul(K, c)) ==
                  doctest::Approx(tradeoff_odd(K, 1, alpha).upper).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(converse_enumerate(16, 1, uniform_backhaul(16, 0.1)), LimitExceeded);
}

TEST_CASE("enumerated converse handles non-uniform capacities") {
    // A single strong link cannot raise the bound above the uniform equivalent.
    const BackhaulGraph lopsided = make_backhaul(4, {{0, 1, 6.0}});
    const double bound = converse_enumerate(4, 1, lopsided);
    CHECK(bound <= 1.0);
    CHECK(bound >= 0.5);  // never below the no-cooperation floor
}

TEST_CASE("centralized-scheme load lower bounds") {
    CHECK(claims_load_lower_bounds(4, 1) == std::pair<double, double>{1.0, 3.0});
    CHECK(claims_load_lower_bounds(3, 2) == std::pair<double, double>{2.0, 4.0});
    // Total-load consequence at the best degree K-1: K*alpha >= 3M(K-1) - M(K-1) = 2M(K-1).
    for (int K : {3, 4, 7}) {
        for (int M : {1, 2}) {
            const double central = claims_load_lower_bounds(K, M).second;
            CHECK(3.0 * central - M * (K - 1) == doctest::Approx(2.0 * M * (K - 1)));
        }
    }
}

TEST_CASE("odd bounds sandwich and the corner gap shrinks like 1/K^2") {
    for (int K = 3; K <= 99; K += 2) {
        for (double alpha : {0.0, 0.5, 1.0, 2.0}) {
            const OddBounds bounds = tradeoff_odd(K, 1, alpha);
            CHECK(bounds.lower <= bounds.upper + 1e-15);
        }
        const double corner_gap = 2.0 * 1 * (K - 1) / K - alpha_min_converse(K, 1);
        CHECK(corner_gap == doctest::Approx(2.0 * (K - 1) / (K * (K + 1))).epsilon(1e-12));
    }
}

TEST_CASE("curves are nondecreasing, concave and capped at M") {
    const auto check_curve = [](const std::vector<double>& values, int M) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            CHECK(values[i] <= M + 1e-12);
            if (i > 0) CHECK(values[i] >= values[i - 1] - 1e-12);
            if (i > 1) {
                const double left = values[i - 1] - values[i - 2];
                const double right = values[i] - values[i - 1];
                CHECK(right <= left + 1e-9);
            }
        }
    };
    for (int M : {1, 2}) {
        std::vector<double> even, odd_lower, odd_upper, asymptotic;
        for (int s = 0; s <= 60; ++s) {
            const double alpha = 0.1 * s;
            even.push_back(tradeoff_even(6, M, alpha));
            const OddBounds bounds = tradeoff_odd(7, M, alpha);
            odd_lower.push_back(bounds.lower);
            odd_upper.push_back(bounds.upper);
            asymptotic.push_back(tradeoff_asymptotic(M, alpha));
        }
        check_curve(even, M);
        check_curve(odd_lower, M);
        check_curve(odd_upper, M);
        check_curve(asymptotic, M);
    }
}

TEST_CASE("even curve converges monotonically to the asymptotic curve") {
    for (double alpha : {0.0, 0.5, 1.0, 1.7, 3.0}) {
        double previous = tradeoff_even(2, 1, alpha);
        for (int K = 4; K <= 100; K += 2) {
            const double value = tradeoff_even(K, 1, alpha);
            CHECK(value <= previous + 1e-15);
            previous = value;
        }
        CHECK(previous >= tradeoff_asymptotic(1, alpha) - 1e-15);
        CHECK(previous - tradeoff_asymptotic(1, alpha) <= alpha / (4.0 * 99.0) + 1e-15);
    }
}

TEST_CASE("sampled trade-off curve structure") {
    const TradeoffCurve curve = sample_tradeoff_curve(3, 1, 2.0, 5);
    REQUIRE(curve.points.size() == 5);
    CHECK(curve.points.front().alpha == 0.0);
    CHECK(curve.points.back().alpha == 2.0);
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        const auto& p = curve.points[i];
        CHECK(p.dof_lower <= p.dof_upper + 1e-15);
        if (i > 0) CHECK(p.alpha > curve.points[i - 1].alpha);
    }
    const TradeoffCurve even = sample_tradeoff_curve(4, 2, 4.0, 9);
    for (const auto& p : even.points) CHECK(p.dof_lower == p.dof_upper);
    CHECK_THROWS_AS(sample_tradeoff_curve(3, 1, 2.0, 1), InvalidArgument);
}
