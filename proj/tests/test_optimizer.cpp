#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zb/errors.hpp"
#include "zb/optimizer.hpp"
#include "zb/parallel.hpp"

using zb::ConstraintStatus;
using zb::ConstraintVariant;

TEST_CASE("b value pins and domain") {
    CHECK(zb::b_value(1.38, 0.56) == doctest::Approx(9.315).epsilon(1e-9));
    CHECK(zb::b_value(2.0, 0.75) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(zb::b_value(20.0, 0.99) >= 220.0);
    CHECK_THROWS_AS(zb::b_value(1.0, 0.6), zb::precondition_error);
    CHECK_THROWS_AS(zb::b_value(2.0, 0.5), zb::precondition_error);
    CHECK_THROWS_AS(zb::b_value(2.0, 1.0), zb::precondition_error);
}

TEST_CASE("constraint variants at the reference point") {
    auto v2 = zb::constraint_value(ConstraintVariant::V2, 1.38, 18.63, 0.56, 1.0);
    CHECK(std::abs(v2.value - 2.40e-3) < 1e-4);
    CHECK(v2.status == ConstraintStatus::satisfied);
    CHECK(v2.a == doctest::Approx(1.1522).epsilon(1e-4));

    auto v1 = zb::constraint_value(ConstraintVariant::V1, 1.38, 18.63, 0.56, 1.0);
    CHECK(v1.value > 0.25);
    CHECK(v1.status == ConstraintStatus::violated);

    auto v3 = zb::constraint_value(ConstraintVariant::V3, 1.38, 18.63, 0.56, 1.0);
    CHECK(v3.a < 1.0);
    CHECK(v3.status == ConstraintStatus::vacuous);
}

TEST_CASE("constraint edge cases") {
    // smallest double above 1: c1 passes the domain check but c1^{1-c3}
    // rounds to exactly 1
    CHECK_THROWS_AS(zb::constraint_value(ConstraintVariant::V2, std::nextafter(1.0, 2.0),
                                         18.63, 0.56, 1.0),
                    zb::singularity_error);
    CHECK_THROWS_AS(zb::constraint_value(ConstraintVariant::V2, 1.38, -1.0, 0.56, 1.0),
                    zb::precondition_error);
    CHECK_THROWS_AS(zb::constraint_value(ConstraintVariant::V2, 1.38, 18.63, 0.56, 0.5),
                    zb::precondition_error);
}

TEST_CASE("worst k") {
    // lambda = c2 (1 - c3) = 8.1972: peak below 1, clamped
    auto w = zb::worst_k(ConstraintVariant::V2, 1.38, 18.63, 0.56);
    CHECK_FALSE(w.diverges);
    CHECK(w.k == 1.0);
    // lambda = 5 * 0.1 = 0.5: peak at 2
    auto w2 = zb::worst_k(ConstraintVariant::V2, 1.38, 5.0, 0.9);
    CHECK(w2.k == doctest::Approx(2.0));
    auto w1 = zb::worst_k(ConstraintVariant::V1, 1.38, 18.63, 0.56);
    CHECK(w1.diverges);
    auto w3 = zb::worst_k(ConstraintVariant::V3, 1.38, 18.63, 0.56);
    CHECK(w3.diverges);
}

TEST_CASE("degenerate grid reproduces the reference point") {
    zb::GridSpec g{1.38, 1.38, 0.56, 0.56, 0.01};
    auto rep = zb::grid_search({ConstraintVariant::V2}, g);
    REQUIRE(rep.variants.size() == 1);
    const auto& vr = rep.variants[0];
    CHECK(vr.feasible);
    CHECK(vr.best_b == doctest::Approx(9.315).epsilon(1e-9));
    CHECK(vr.best_c2 == doctest::Approx(18.63).epsilon(1e-5));
    CHECK(vr.best_c1 == 1.38);
    CHECK(vr.best_c3 == 0.56);
    CHECK(vr.at_best.status == ConstraintStatus::satisfied);
    CHECK(vr.side_at_best.all());
}

TEST_CASE("grid search validates inputs") {
    CHECK_THROWS_AS(zb::grid_search({ConstraintVariant::V2}, {1.0, 2.0, 0.5, 1.0, 0.0}),
                    zb::precondition_error);
    CHECK_THROWS_AS(zb::grid_search({ConstraintVariant::V2}, {}, {}), zb::precondition_error);
}

TEST_CASE("the stated feasible point below the reference minimum") {
    // b(1.5, 0.65) = 5.25 and V2 holds there with c2 = 2b(1+margin)
    CHECK(zb::b_value(1.5, 0.65) == doctest::Approx(5.25).epsilon(1e-12));
    auto cv = zb::constraint_value(ConstraintVariant::V2, 1.5, 10.5 * (1 + 1e-6), 0.65, 1.0);
    CHECK(cv.status == ConstraintStatus::satisfied);
}

TEST_CASE("full default search: V2 feasible below the reference, V1 and V3 empty") {
    auto rep = zb::grid_search(
        {ConstraintVariant::V1, ConstraintVariant::V2, ConstraintVariant::V3});
    REQUIRE(rep.variants.size() == 3);
    CHECK(rep.reference_b == doctest::Approx(9.315).epsilon(1e-9));
    CHECK(rep.monotonicity_ok);
    CHECK(rep.reference_on_grid);

    const auto& v1 = rep.variants[0];
    CHECK_FALSE(v1.feasible);
    CHECK(v1.n_feasible == 0);

    const auto& v2 = rep.variants[1];
    CHECK(v2.feasible);
    CHECK(v2.best_b <= 9.315 + 1e-9);
    CHECK(v2.best_b <= 5.25 + 1e-9); // the stated point is feasible, so the min is at most 5.25
    CHECK(v2.at_best.status == ConstraintStatus::satisfied);
    CHECK(v2.side_at_best.all());
    CHECK(v2.at_reference.status == ConstraintStatus::satisfied);

    const auto& v3 = rep.variants[2];
    CHECK_FALSE(v3.feasible);
    CHECK(v3.at_reference.status == ConstraintStatus::vacuous);
}

TEST_CASE("search is deterministic and worker-count independent") {
    zb::GridSpec g{1.0, 4.0, 0.5, 1.0, 0.02};
    zb::set_max_threads(1);
    auto a = zb::grid_search({ConstraintVariant::V2}, g);
    zb::set_max_threads(4);
    auto b = zb::grid_search({ConstraintVariant::V2}, g);
    zb::set_max_threads(0);
    CHECK(a.variants[0].best_b == b.variants[0].best_b);
    CHECK(a.variants[0].best_c1 == b.variants[0].best_c1);
    CHECK(a.variants[0].best_c3 == b.variants[0].best_c3);
    CHECK(a.variants[0].n_feasible == b.variants[0].n_feasible);
}
