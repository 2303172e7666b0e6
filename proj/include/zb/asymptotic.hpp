#pragma once
// Log-domain evaluation of the large-value measure bounds, the four-region
// exponential-moment integral chain, the per-set integral bounds, the
// geometric-series summability check, and the assembled constant C(k),
// all in the regime loglog T >= 1e8 where log T itself is not representable.

#include <string>
#include <vector>

#include "zb/log_scalar.hpp"
#include "zb/partition.hpp"

namespace zb {

// Absolute constants left free by the bounds; all configurable.
struct BoundConstants {
    double N = 0.0;  // additive constant in the majorant
    double M = 1.0;  // S(0) measure bound
    double C1 = 1.0; // all-small set, plain polynomial
    double C2 = 1.0; // S(j), plain polynomial
    double b1 = 1.0, b2 = 1.0, b3 = 1.0; // the three measure-bound ranges
    double D1 = 1.0, D2 = 1.0; // multipliers on the e^k size of the full-majorant bounds
};

struct RegimeParams {
    double k = 1.0;
    double L = 1e8; // loglog T
    BoundConstants consts;

    double L3() const;                  // log L, i.e. logloglog T
    bool in_regime() const;             // L >= (10000 k)^2
    void validate() const;              // k >= 1, L3 > 5
};

// Measure-bound range endpoints: T1 = 10 sqrt(L), T2 = L, T3 = L log(L)/2.
struct RangeEndpoints {
    double T1, T2, T3;
};
RangeEndpoints range_endpoints(const RegimeParams& p);

// Bound on meas{ t in [T,2T] : log|zeta| >= V } / T, by V-range:
//   (T1,T2]:  b1 (V/sqrt L) exp(-(V^2/L)(1 - 4/L3))
//   (T2,T3]:  b2 (V/sqrt L) exp(-(V^2/L)(1 - 7V/(4 L L3))^2)
//   (T3,inf): b3 exp(-(1/33) V log V)
// V <= T1 falls back to the trivial bound 1 (range 0). Requires V >= 3.
struct LargeValueBound {
    LogScalar bound;
    int range = 0; // 0 trivial, 1..3 as above
};
LargeValueBound large_value_bound(double V, const RegimeParams& p);

// One region of  2k * integral e^{2kV} meas(S(T,V))/T dV, both as honest
// log-domain panel quadrature of the integrand and as the chained
// closed-form bound. Region 1 covers V <= T1 with meas/T <= 1.
struct RegionIntegral {
    int region = 1;
    LogScalar quadrature;  // log-domain quadrature of the region integrand
    LogScalar closed_form; // the chained closed-form bound for the region
    std::uint64_t panels = 0;
    std::vector<std::string> warnings;
};
// strict_regime: throw regime_error when L < (10000 k)^2 instead of warning.
RegionIntegral region_integral(int region, const RegimeParams& p,
                               bool strict_regime = false);

// 2 + 2 b1 sqrt(pi) + 512 b2 sqrt(pi) + 3 b3, the k^2 coefficient that the
// four regions chain up to.
double d3_coefficient(double b1, double b2, double b3);

enum class SetBound { all_small_plain, s0_measure, sj_plain, all_small_full, sj_full };

// log of (stated right-hand side) / T for the per-set integral bounds.
// j is used by the sj kinds only and must satisfy 1 <= j <= cap-1.
LogScalar set_bound_log(SetBound label, int j, const HarperParams& hp,
                    const RegimeParams& p);

// sum over j = 1..cap-1 of exp(2k/beta_j - beta_{j+1}^{-1} log(1/beta_{j+1})/c4),
// log-sum-exp. passes <=> sum <= 1. hypothesis_ok records c2/b > 2; a
// violated hypothesis is reported, the sum is still returned.
struct GeometricSumCheck {
    LogScalar sum;
    bool passes = false;
    bool hypothesis_ok = false;
    int cap = 0;
    double worst_term_log = 0.0; // largest term exponent
    int worst_j = 0;
};
GeometricSumCheck geometric_sum_check(const HarperParams& hp, double k, double L);

// true  <=>  65 k^2 - 2L/c1 <= 2 k^2  (the Cauchy-Schwarz exponent collapses)
bool s0_exponent_check(const HarperParams& hp, double k, double L);

// Both readings of the cap-gap side condition, checked for all 1 <= j <= cap-1:
//   statement: cap - j <= (1/beta_j)/log c1
//   proof:     cap - j <= log(1/beta_j)/log c1
struct CapGapChecks {
    bool statement_ok = true;
    bool proof_ok = true;
};
CapGapChecks cap_gap_checks(const HarperParams& hp, double k, double L);

// C(k) = e^{2k/beta_cap + 2kN} D1(k) + cap * e^{2kN} D2(k) + sqrt(D3(k) M),
// D1(k) = D1 e^k, D2(k) = D2 e^k, D3(k) = d3_coefficient * k^2.
struct AssembledConstant {
    LogScalar C;
    LogScalar term_all_small; // e^{2k/beta_cap + 2kN} D1(k)
    LogScalar term_sj;        // cap e^{2kN} D2(k)
    LogScalar term_s0;        // sqrt(D3(k) M)
    int cap = 0;
    std::vector<std::string> warnings; // failed hypotheses, regime gaps
};
AssembledConstant assemble_log_C(const HarperParams& hp, const RegimeParams& p);

} // namespace zb
