#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zb/asymptotic.hpp"
#include "zb/erf.hpp"
#include "zb/errors.hpp"
#include "zb/log_scalar.hpp"

using zb::HarperParams;
using zb::LogScalar;
using zb::RegimeParams;

TEST_CASE("log-domain scalar arithmetic") {
    auto a = LogScalar::from_log(1e16);
    auto b = LogScalar::from_log(1e16 - 3.0);
    CHECK((a * b).log() == doctest::Approx(2e16 - 3.0));
    CHECK((a + b).log() == doctest::Approx(1e16 + std::log1p(std::exp(-3.0))));
    CHECK(b < a);
    CHECK(LogScalar::zero() < b);
    CHECK((LogScalar::zero() + a).log() == a.log());
    CHECK((LogScalar::zero() * a).is_zero());
    CHECK(LogScalar::from_value(0.0).is_zero());
    CHECK(LogScalar::from_value(2.5).log() == doctest::Approx(std::log(2.5)));
}

TEST_CASE("erf pins") {
    CHECK(zb::erf(0.0) == 0.0);
    CHECK(std::abs(zb::erf(1.0) - 0.8427008) < 1e-7);
    CHECK(std::abs(zb::erf(1.0) - oracle::erf_maclaurin(1.0)) < 1e-13);
    CHECK(std::abs(zb::erf(10.0) - 1.0) < 1e-10);
    CHECK(std::abs(zb::erfc(0.5) - (1.0 - zb::erf(0.5))) < 1e-15);
}

TEST_CASE("erf is odd, increasing, bounded on a 1e3 grid") {
    double prev = -1.1;
    for (int i = 0; i < 1000; ++i) {
        // strictly increasing up to |x| = 5; past that double saturates at 1
        double x = -5.0 + 10.0 * i / 999.0;
        double y = zb::erf(x);
        CHECK(std::abs(y) <= 1.0);
        CHECK(y > prev);
        CHECK(y == -zb::erf(-x));
        if (std::abs(x) <= 3.0) CHECK(std::abs(y - oracle::erf_maclaurin(x)) < 1e-10);
        prev = y;
    }
    CHECK(std::abs(zb::erf(6.5)) <= 1.0);
    CHECK(std::abs(zb::erf(-40.0)) <= 1.0);
}

TEST_CASE("measure-bound range endpoints at L = 1e8") {
    RegimeParams p;
    auto e = zb::range_endpoints(p);
    CHECK(e.T1 == doctest::Approx(1e5));
    CHECK(e.T2 == doctest::Approx(1e8));
    CHECK(e.T3 == doctest::Approx(9.2103e8).epsilon(1e-4));
}

TEST_CASE("measure bound selects ranges by the half-open convention") {
    RegimeParams p;
    auto e = zb::range_endpoints(p);
    CHECK_THROWS_AS(zb::large_value_bound(2.0, p), zb::precondition_error);
    CHECK(zb::large_value_bound(e.T1, p).range == 0);          //V <= T1: trivial bound
    CHECK(zb::large_value_bound(e.T1 + 1.0, p).range == 1);
    auto at_T2 = zb::large_value_bound(e.T2, p);
    CHECK(at_T2.range == 1); // (T1, T2] belongs to the first formula
    double formula = std::log(e.T2 / std::sqrt(p.L)) -
                     (e.T2 * e.T2 / p.L) * (1.0 - 4.0 / p.L3());
    CHECK(at_T2.bound.log() == doctest::Approx(formula));
    CHECK(zb::large_value_bound(e.T2 + 1.0, p).range == 2);
    CHECK(zb::large_value_bound(e.T3, p).range == 2);
    CHECK(zb::large_value_bound(e.T3 + 1.0, p).range == 3);

    // interior of the middle range: 7V/(4 L L3) <= 7/8, equality at T3
    for (double V = e.T2; V <= e.T3; V += (e.T3 - e.T2) / 50.0)
        CHECK(7.0 * V / (4.0 * p.L * p.L3()) <= 7.0 / 8.0 + 1e-12);
    CHECK(7.0 * e.T3 / (4.0 * p.L * p.L3()) == doctest::Approx(7.0 / 8.0));
}

TEST_CASE("measure bound is continuous within ranges and decreasing where its "
          "exponent still tightens") {
    RegimeParams p;
    auto e = zb::range_endpoints(p);
    // In the middle range the decay factor (1 - 7V/(4 L L3))^2 turns around
    // at V = (2/7) L L3: d/dV [(V^2/L)(1-x)^2] has the sign of (1-x)(1-2x).
    // The formula is monotone below that point and rises again toward T3.
    double turn = 2.0 / 7.0 * p.L * p.L3();
    struct Span { double lo, hi; };
    for (auto [lo, hi] : {Span{e.T1 * 1.001, e.T2}, Span{e.T2 * 1.001, turn},
                          Span{e.T3 * 1.001, e.T3 * 20}}) {
        double prev_log = 0.0;
        for (int i = 0; i <= 100; ++i) {
            double V = lo + (hi - lo) * i / 100.0;
            double cur = zb::large_value_bound(V, p).bound.log();
            if (i > 0) {
                CHECK(cur < prev_log);
                // continuity probe within the range
                double mid = zb::large_value_bound(V * (1 - 1e-9), p).bound.log();
                CHECK(std::abs(mid - cur) < 1e-3 * (1.0 + std::abs(cur)));
            }
            prev_log = cur;
        }
    }
}

TEST_CASE("region 1: closed form is k L exactly and dominates the quadrature") {
    RegimeParams p;
    auto r = zb::region_integral(1, p);
    CHECK(r.closed_form.log() == doctest::Approx(1e8));
    CHECK(r.quadrature.log() == doctest::Approx(2e5 - std::log(2.0)).epsilon(1e-4));
    CHECK(r.quadrature <= r.closed_form);
}

TEST_CASE("region 3 closed form pins to its stated coefficient") {
    RegimeParams p;
    auto r = zb::region_integral(3, p);
    CHECK(r.closed_form.log() ==
          doctest::Approx(std::log(256.0 * std::sqrt(M_PI)) + 65.0 * 1e8));
}

TEST_CASE("regions 2 and 3: quadrature stays below the chained closed form") {
    for (double L : {1e8, 4e8}) {
        for (double k : {1.0, 2.0, 3.0}) {
            RegimeParams p{k, L, {}};
            for (int region : {2, 3}) {
                auto r = zb::region_integral(region, p);
                CHECK(r.quadrature <= r.closed_form);
                CHECK(r.panels >= 10000);
            }
        }
    }
}

TEST_CASE("region 4 far tail alone is bounded by b3") {
    // weakened integrand e^{2kV} e^{-V(2k+1)} = e^{-V} beyond e^{33(2k+1)}:
    // direct tail quadrature, then the absolute bound b3 * T
    for (double k : {1.0, 2.0}) {
        double X = std::exp(33.0 * (2.0 * k + 1.0));
        // integral of e^{-V} over [X, inf): midpoint panels of e^{-(V-X)}
        // over a 60-wide window carry all the mass, scaled by e^{-X}
        long double s = 0;
        int n = 100000;
        long double h = 60.0L / n;
        for (int i = 0; i < n; ++i) s += std::exp(-(i + 0.5L) * h) * h;
        double log_tail = -X + std::log((double)s);
        CHECK(log_tail <= 0.0); // log b3 with b3 = 1
    }
}

TEST_CASE("region quadrature in strict regime mode") {
    RegimeParams p{2.0, 1e8, {}}; // (10000*2)^2 = 4e8 > 1e8
    CHECK_FALSE(p.in_regime());
    CHECK_THROWS_AS(zb::region_integral(2, p, true), zb::regime_error);
    auto r = zb::region_integral(2, p, false);
    CHECK(r.warnings.size() == 1);
}

TEST_CASE("d3 coefficient") {
    CHECK(zb::d3_coefficient(0, 0, 0) == 2.0);
    CHECK(zb::d3_coefficient(1, 1, 1) ==
          doctest::Approx(2.0 + 514.0 * std::sqrt(M_PI) + 3.0).epsilon(1e-15));
    double base = zb::d3_coefficient(1, 1, 1);
    CHECK(zb::d3_coefficient(1, 2, 1) - base == doctest::Approx(512.0 * std::sqrt(M_PI)));
    CHECK_THROWS_AS(zb::d3_coefficient(-1, 0, 0), zb::precondition_error);
}

TEST_CASE("per-set bound logs") {
    HarperParams hp{1.38, 18.63, 0.56};
    RegimeParams p;
    CHECK(zb::set_bound_log(zb::SetBound::all_small_plain, 0, hp, p).log() == doctest::Approx(1e8));
    CHECK(zb::set_bound_log(zb::SetBound::s0_measure, 0, hp, p).log() ==
          doctest::Approx(-2e16 / 1.38).epsilon(1e-12));
    CHECK(zb::set_bound_log(zb::SetBound::all_small_full, 0, hp, p).log() == doctest::Approx(1e8 + 1.0));

    // deeper S(j) levels carry weaker decay: the bound grows with j
    auto s1 = zb::set_bound_log(zb::SetBound::sj_plain, 1, hp, p);
    auto slast = zb::set_bound_log(zb::SetBound::sj_plain, 57, hp, p);
    CHECK(s1 < slast);
    CHECK(zb::set_bound_log(zb::SetBound::sj_full, 1, hp, p).log() ==
          doctest::Approx(s1.log() + 1.0));

    CHECK_THROWS_AS(zb::set_bound_log(zb::SetBound::sj_plain, 0, hp, p), zb::precondition_error);
    CHECK_THROWS_AS(zb::set_bound_log(zb::SetBound::sj_plain, 58, hp, p), zb::precondition_error);
}

TEST_CASE("geometric series check at the reference optimum") {
    HarperParams hp{1.38, 18.63, 0.56};
    auto g = zb::geometric_sum_check(hp, 1.0, 1e8);
    CHECK(g.cap == 58);
    // the deepest term blows up: log(1/beta_cap) < c2 k makes its exponent
    // positive, so the sum is astronomically larger than 1
    CHECK(g.worst_j == 57);
    CHECK(g.worst_term_log > 1e6);
    CHECK_FALSE(g.passes);
}

TEST_CASE("geometric series check passes once c2 clears 2b + log c1") {
    HarperParams hp{1.38, 2.0 * 9.315 + 1.0, 0.56};
    auto g = zb::geometric_sum_check(hp, 1.0, 1e8);
    CHECK(g.hypothesis_ok);
    CHECK(g.passes);
    CHECK(g.sum.log() < 0.0);
}

TEST_CASE("geometric series empty and violated-hypothesis cases") {
    HarperParams quiet{1.38, 40.0, 0.56}; // e^{-40} < 1/L^2: cap = 1
    auto g = zb::geometric_sum_check(quiet, 1.0, 1e8);
    CHECK(g.cap == 1);
    CHECK(g.sum.is_zero());
    CHECK(g.passes);

    HarperParams eq{1.38, 9.315, 0.56}; // c2 = b
    auto h = zb::geometric_sum_check(eq, 1.0, 1e8);
    CHECK_FALSE(h.hypothesis_ok);
    CHECK_FALSE(h.sum.is_zero()); // sum still computed and returned
}

TEST_CASE("exponent collapse check") {
    HarperParams hp{1.38, 18.63, 0.56};
    CHECK(zb::s0_exponent_check(hp, 1.0, 1e8));
    CHECK(zb::s0_exponent_check(hp, 1.0, 63.0 * 1.38 / 2.0)); // boundary: equality
    CHECK_FALSE(zb::s0_exponent_check(hp, 1.0, 1e-9));
}

TEST_CASE("cap-gap side condition, both readings") {
    HarperParams hp{1.38, 18.63, 0.56};
    auto cg = zb::cap_gap_checks(hp, 1.0, 1e8);
    CHECK(cg.statement_ok);
    CHECK(cg.proof_ok);
}

TEST_CASE("assembled constant: self-consistency and degenerate zero") {
    HarperParams hp{1.38, 18.63, 0.56};
    RegimeParams p;
    auto a = zb::assemble_log_C(hp, p);
    CHECK(a.cap == 58);
    auto recombined = a.term_all_small + a.term_sj + a.term_s0;
    CHECK(a.C.log() == doctest::Approx(recombined.log()).epsilon(1e-14));
    // dominant term is 2k/beta_cap, well under 2k L^2
    CHECK(a.C.log() < 2.0 * 1e16);
    CHECK(a.C.log() == doctest::Approx(2.0 * std::exp(-zb::beta_log(58, hp, 1e8)) + 1.0)
                           .epsilon(1e-6));

    RegimeParams zeroed;
    zeroed.consts.D1 = 0.0;
    zeroed.consts.D2 = 0.0;
    zeroed.consts.M = 0.0;
    auto z = zb::assemble_log_C(hp, zeroed);
    CHECK(z.C.is_zero());
}

TEST_CASE("doubly exponential growth of the assembled constant in k") {
    // in-regime L per k so the cap reflects e^{-c2 k}: log log C / k near c2
    HarperParams hp{1.38, 18.63, 0.56};
    for (double k : {3.0, 4.0, 5.0, 6.0}) {
        double L = std::max((1e4 * k) * (1e4 * k), std::exp((18.63 * k + 8.0) / 2.0));
        RegimeParams p{k, L, {}};
        auto a = zb::assemble_log_C(hp, p);
        double ratio = std::log(a.C.log()) / k / 18.63;
        CHECK(ratio > 0.85);
        CHECK(ratio < 1.15);
    }
}
