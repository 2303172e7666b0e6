#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zb/errors.hpp"
#include "zb/ks_constants.hpp"

TEST_CASE("arithmetic factor at the exact points") {
    CHECK(std::abs(zb::arithmetic_factor(1.0, 1000000) - 1.0) < 1e-6);
    CHECK(std::abs(zb::arithmetic_factor(2.0, 1000000) - 0.607927) < 1e-4);
    CHECK(zb::arithmetic_factor(0.0, 1000) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(zb::arithmetic_factor(1.0, 500), zb::precondition_error);
    CHECK_THROWS_AS(zb::arithmetic_factor(-1.0, 10000), zb::precondition_error);
}

TEST_CASE("Euler-product truncation tail shrinks geometrically") {
    for (double k : {1.0, 1.5, 2.0, 3.0}) {
        double a4 = zb::arithmetic_factor(k, 10000);
        double a5 = zb::arithmetic_factor(k, 100000);
        double a6 = zb::arithmetic_factor(k, 1000000);
        // 1e-12 floor: at k = 1 every local factor is exactly 1 and both
        // differences are pure rounding noise
        CHECK(std::abs(a6 - a5) < 10.0 * std::abs(a5 - a4) + 1e-12);
    }
}

TEST_CASE("matrix limit factor: closed forms and extrapolation") {
    auto f1 = zb::rmt_factor(1.0, 2000);
    REQUIRE(f1.closed_form.has_value());
    CHECK(*f1.closed_form == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(f1.limit - 1.0) < 1e-3);

    auto f2 = zb::rmt_factor(2.0, 2000);
    REQUIRE(f2.closed_form.has_value());
    CHECK(*f2.closed_form == doctest::Approx(1.0 / 12).epsilon(1e-12));
    CHECK(std::abs(f2.limit - 1.0 / 12) / (1.0 / 12) < 0.01);

    auto f0 = zb::rmt_factor(0.0, 200);
    CHECK(f0.limit == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(*f0.closed_form == 1.0);

    CHECK_THROWS_AS(zb::rmt_factor(1.0, 50), zb::precondition_error);
}

TEST_CASE("extrapolated limit within 1% of the closed form for integer k") {
    for (double k : {1.0, 2.0, 3.0, 4.0}) {
        auto f = zb::rmt_factor(k, 2000);
        REQUIRE(f.closed_form.has_value());
        CHECK(std::abs(f.limit - *f.closed_form) / *f.closed_form < 0.01);
    }
}

TEST_CASE("assembled constants") {
    auto c1 = zb::moment_constant(1.0, {1000000, 2000});
    CHECK(std::abs(c1.c_k - 1.0) < 1e-5);

    auto c2 = zb::moment_constant(2.0, {1000000, 2000});
    CHECK(std::abs(c2.c_k - 0.0506606) < 1e-3);
    CHECK(c2.c_k == c2.a_k * c2.f_k);

    auto c3 = zb::moment_constant(3.0, {100000, 2000});
    CHECK(c3.c_k > 0.0);
    CHECK(c3.c_k < c2.c_k);
}

TEST_CASE("c_k decreases in k") {
    double prev = 1e9;
    for (double k : {1.0, 2.0, 3.0, 4.0, 5.0}) {
        auto r = zb::moment_constant(k, {100000, 1000});
        CHECK(r.a_k > 0.0);
        CHECK(r.f_k > 0.0);
        CHECK(r.c_k < prev);
        prev = r.c_k;
    }
}
