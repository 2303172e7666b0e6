#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zb/errors.hpp"
#include "zb/primes.hpp"

using zb::PrimeWindow;

TEST_CASE("primes_in matches definition on pinned windows") {
    CHECK(zb::primes_in({1, 10}) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(zb::primes_in({10, 11}) == std::vector<std::uint64_t>{11});
    CHECK(zb::primes_in({13.5, 16.9}).empty());
}

TEST_CASE("degenerate and invalid windows are rejected") {
    CHECK_THROWS_AS(zb::primes_in({13, 13}), zb::precondition_error);
    CHECK_THROWS_AS(zb::primes_in({5, 2}), zb::precondition_error);
    CHECK_THROWS_AS(zb::primes_in({0.5, 10}), zb::precondition_error);
    CHECK_THROWS_AS(zb::primes_in({1, 2e9}), zb::capacity_error);
}

TEST_CASE("primes_in agrees with trial division on fractional windows") {
    for (auto [lo, hi] : {std::pair<double, double>{1.0, 200.0},
                          {96.5, 1000.25},
                          {5000.0, 6001.7},
                          {2.0, 3.0}}) {
        CHECK(zb::primes_in({lo, hi}) == oracle::primes_in(lo, hi));
    }
}

TEST_CASE("primes_in is deterministic and concatenates across adjacent windows") {
    auto a = zb::primes_in({1, 5000});
    CHECK(a == zb::primes_in({1, 5000}));
    auto lo = zb::primes_in({1, 777.7});
    auto hi = zb::primes_in({777.7, 5000});
    lo.insert(lo.end(), hi.begin(), hi.end());
    CHECK(a == lo);
}

TEST_CASE("sum of prime reciprocals over (1, 100]") {
    double s = zb::sum_prime_reciprocals({1, 100});
    CHECK(s == doctest::Approx(oracle::sum_recip(1, 100)).epsilon(1e-13));
    CHECK(std::abs(s - 1.8029) < 1e-4);
}

TEST_CASE("single-prime window (1, 2]") {
    CHECK(zb::sum_prime_reciprocals({1, 2}) == 0.5);
}

TEST_CASE("reciprocal sums are additive over adjacent windows") {
    const double hi = 2.5e6;
    double whole = zb::sum_prime_reciprocals({1, hi});
    for (double split : {2.0, 97.3, 1e3, 1.234e6}) {
        double parts =
            zb::sum_prime_reciprocals({1, split}) + zb::sum_prime_reciprocals({split, hi});
        CHECK(std::abs(whole - parts) < 1e-12);
    }
}

TEST_CASE("prime reciprocal window (1e4, 1e4^1.38] approximates log 1.38") {
    double hi = std::exp(1.38 * std::log(1e4));
    double s = zb::sum_prime_reciprocals({1e4, hi});
    CHECK(s == doctest::Approx(oracle::sum_recip(1e4, hi)).epsilon(1e-12));
    CHECK(std::abs(s - std::log(1.38)) < 0.01);
}

TEST_CASE("mertens_window fields and preconditions") {
    auto mw = zb::mertens_window(1e4, 1.38);
    CHECK(mw.expected == doctest::Approx(std::log(1.38)));
    CHECK(mw.sum - mw.expected == mw.deviation);
    CHECK(std::abs(mw.deviation) < 0.01);

    CHECK(zb::mertens_window(1e5, 2.0, 1e10 + 1).expected == doctest::Approx(std::log(2.0)));
    CHECK_THROWS_AS(zb::mertens_window(1e2, 1.0), zb::precondition_error);
    CHECK_THROWS_AS(zb::mertens_window(50, 1.5), zb::precondition_error);
    CHECK_THROWS_AS(zb::mertens_window(1e5, 2.0), zb::capacity_error); // default capacity
}

// Slow: the c = 2 column sieves up to 1e10.
TEST_CASE("mertens deviations shrink in x and stay below 0.02") {
    const double capacity = 1.001e10;
    for (double c : {1.2, 1.38, 2.0}) {
        double prev = 1e9;
        for (double x : {1e3, 1e4, 1e5}) {
            double dev = std::abs(zb::mertens_window(x, c, capacity).deviation);
            CHECK(dev < 0.02);
            CHECK(dev <= prev + 1e-12); // non-strict decrease
            prev = dev;
        }
    }
}
