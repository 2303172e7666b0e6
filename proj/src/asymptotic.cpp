#include "zb/asymptotic.hpp"

#include <cfloat>
#include <cmath>
#include <string>

#include "zb/errors.hpp"

namespace zb {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Panel quadrature of e^{phi} in the log domain.
//
// Per panel the integrand is fit log-linearly (exact for linear phi), panels
// are combined by a running log-sum-exp, and the panel count doubles from
// 1e4 until the Richardson-extrapolated log-result is stable below 1e-6
// (or at the floating-point resolution of the result, whichever is coarser).
// ---------------------------------------------------------------------------

struct LseAcc {
    double mx = kNegInf;
    double s = 0.0;
    void add(double x) {
        if (x == kNegInf) return;
        if (x <= mx) {
            s += std::exp(x - mx);
        } else {
            s = s * std::exp(mx - x) + 1.0;
            mx = x;
        }
    }
    double log() const { return s > 0.0 ? mx + std::log(s) : kNegInf; }
};

// log of integral over one panel [x0, x1] given endpoint logs.
double panel_log(double w, double p0, double p1) {
    if (p0 == kNegInf && p1 == kNegInf) return kNegInf;
    double hi = std::max(p0, p1);
    double d = std::abs(p1 - p0);
    if (!(d > 1e-12)) return hi + std::log(w);
    if (std::isinf(d)) return hi + std::log(w) - 37.0; // one dead endpoint
    return hi + std::log(w) + std::log1p(-std::exp(-d)) - std::log(d);
}

template <class Phi>
double log_integral_once(const Phi& phi, double a, double b, std::uint64_t n) {
    LseAcc acc;
    double w = (b - a) / (double)n;
    double prev = phi(a);
    for (std::uint64_t i = 1; i <= n; ++i) {
        double x = (i == n) ? b : a + (double)i * w;
        double cur = phi(x);
        acc.add(panel_log(w, prev, cur));
        prev = cur;
    }
    return acc.log();
}

struct Section {
    double a, b;
    double scale_log = 0.0; // added to the section's log-integral
};

template <class Phi>
double combined_log(const Phi& phi, const std::vector<Section>& secs,
                    const std::vector<double>& extra_terms, std::uint64_t n_per_sec) {
    LseAcc acc;
    for (const auto& s : secs)
        acc.add(log_integral_once([&](double x) { return phi(x); }, s.a, s.b, n_per_sec) +
                s.scale_log);
    for (double t : extra_terms) acc.add(t);
    return acc.log();
}

double extrapolate(double l1, double l2) {
    // (4 I2 - I1)/3 in the log domain; falls back to I2 when not contractive
    if (l1 == kNegInf || l2 == kNegInf) return l2;
    if (l1 - l2 >= std::log(4.0) - 0.1) return l2;
    return l2 + std::log((4.0 - std::exp(l1 - l2)) / 3.0);
}

template <class Phi>
std::pair<double, std::uint64_t> ladder(const Phi& phi, const std::vector<Section>& secs,
                                        const std::vector<double>& extra_terms) {
    std::uint64_t n = 10000;
    double prev_raw = combined_log(phi, secs, extra_terms, n);
    double prev_r = prev_raw;
    for (int step = 0; step < 14; ++step) {
        n *= 2;
        double raw = combined_log(phi, secs, extra_terms, n);
        double r = extrapolate(prev_raw, raw);
        double d = std::abs(r - prev_r);
        if (d < 1e-6 || d <= 8.0 * std::abs(r) * DBL_EPSILON)
            return {r, n * secs.size()};
        prev_raw = raw;
        prev_r = r;
    }
    return {prev_r, n * secs.size()};
}

} // namespace

double RegimeParams::L3() const { return std::log(L); }
bool RegimeParams::in_regime() const { return L >= (1e4 * k) * (1e4 * k); }
void RegimeParams::validate() const {
    if (!(k >= 1.0)) throw precondition_error("RegimeParams: k >= 1 required");
    if (!(L3() > 5.0)) throw precondition_error("RegimeParams: log L > 5 required");
}

RangeEndpoints range_endpoints(const RegimeParams& p) {
    p.validate();
    return {10.0 * std::sqrt(p.L), p.L, 0.5 * p.L * p.L3()};
}

LargeValueBound large_value_bound(double V, const RegimeParams& p) {
    p.validate();
    if (!(V >= 3.0)) throw precondition_error("large_value_bound requires V >= 3");
    auto [T1, T2, T3] = range_endpoints(p);
    const auto& c = p.consts;
    LargeValueBound out;
    if (V <= T1) {
        out.range = 0; // below the first range; meas/T <= 1 is all we use
        out.bound = LogScalar::from_log(0.0);
    } else if (V <= T2) {
        out.range = 1;
        out.bound = LogScalar::from_value(c.b1) *
                    LogScalar::from_log(std::log(V / std::sqrt(p.L)) -
                                        (V * V / p.L) * (1.0 - 4.0 / p.L3()));
    } else if (V <= T3) {
        out.range = 2;
        double inner = 1.0 - 7.0 * V / (4.0 * p.L * p.L3());
        out.bound = LogScalar::from_value(c.b2) *
                    LogScalar::from_log(std::log(V / std::sqrt(p.L)) -
                                        (V * V / p.L) * inner * inner);
    } else {
        out.range = 3;
        out.bound = LogScalar::from_value(c.b3) *
                    LogScalar::from_log(-V * std::log(V) / 33.0);
    }
    return out;
}

double d3_coefficient(double b1, double b2, double b3) {
    if (!(b1 >= 0 && b2 >= 0 && b3 >= 0))
        throw precondition_error("d3_coefficient requires nonnegative inputs");
    return 2.0 + 2.0 * b1 * std::sqrt(kPi) + 512.0 * b2 * std::sqrt(kPi) + 3.0 * b3;
}

RegionIntegral region_integral(int region, const RegimeParams& p, bool strict_regime) {
    p.validate();
    RegionIntegral out;
    out.region = region;
    if (region < 1 || region > 4)
        throw precondition_error("region_integral: region must be 1..4");
    if (!p.in_regime()) {
        if (strict_regime)
            throw regime_error("region_integral: L < (10000 k)^2");
        out.warnings.push_back("below the asymptotic regime: L < (10000 k)^2");
    }
    auto [T1, T2, T3] = range_endpoints(p);
    const double k = p.k, L = p.L, L3 = p.L3();
    const auto& c = p.consts;
    const double lnb1 = c.b1 > 0 ? std::log(c.b1) : kNegInf;
    const double lnb2 = c.b2 > 0 ? std::log(c.b2) : kNegInf;
    const double lnb3 = c.b3 > 0 ? std::log(c.b3) : kNegInf;

    switch (region) {
        case 1: {
            // integrand e^{2kV} * 1 over (-inf, T1]; analytic tail below the window
            double lo = T1 - 40.0 / k;
            auto phi = [&](double V) { return 2.0 * k * V; };
            auto [q, n] = ladder(phi, {Section{lo, T1}},
                                 {2.0 * k * lo - std::log(2.0 * k)});
            out.quadrature = LogScalar::from_log(q);
            out.panels = n;
            out.closed_form = LogScalar::from_log(k * L); // T (log T)^k, divided by T
            break;
        }
        case 2: {
            auto phi = [&](double V) {
                return 2.0 * k * V + lnb1 + std::log(V / std::sqrt(L)) -
                       (V * V / L) * (1.0 - 4.0 / L3);
            };
            auto [q, n] = ladder(phi, {Section{T1, T2}}, {});
            out.quadrature = LogScalar::from_log(q);
            out.panels = n;
            out.closed_form = LogScalar::from_value(2.0 * c.b1 * k * std::sqrt(kPi)) *
                              LogScalar::from_log(65.0 * k * k * L);
            break;
        }
        case 3: {
            auto phi = [&](double V) {
                double inner = 1.0 - 7.0 * V / (4.0 * L * L3);
                return 2.0 * k * V + lnb2 + std::log(V / std::sqrt(L)) -
                       (V * V / L) * inner * inner;
            };
            auto [q, n] = ladder(phi, {Section{T2, T3}}, {});
            out.quadrature = LogScalar::from_log(q);
            out.panels = n;
            out.closed_form = LogScalar::from_value(256.0 * c.b2 * k * std::sqrt(kPi)) *
                              LogScalar::from_log(65.0 * k * k * L);
            break;
        }
        case 4: {
            // integrand e^{2kV} b3 V^{-V/33} over (T3, inf). In u = log V the
            // exponent is psi(u) = e^u (2k - u/33) + u + ln b3, with a sharp
            // interior maximum at u0 = 66k - 1 of width 1/sqrt(A), A = e^{u0}/33.
            // The seam |u - u0| <= 1e-6 is handled in the scaled variable
            // v = (u - u0) sqrt(A), where
            //   psi = A + u0 + ln b3 + v/sqrt(A) - v^2/2 - v^3/(3 sqrt A) - v^4/(8A) - ...
            // to avoid the catastrophic cancellation of A e^x (1-x) near x = 0.
            const double u0 = 66.0 * k - 1.0;
            const double uhi = 33.0 * (2.0 * k + 1.0);
            const double A = std::exp(u0) / 33.0;
            const double rA = std::sqrt(A);
            const double seam = 1e-6;
            const double vlink = seam * rA;

            auto phi_u = [&](double u) {
                return std::exp(u) * (2.0 * k - u / 33.0) + u + lnb3;
            };
            auto phi_v = [&](double v) {
                double x = v / rA;
                return A + u0 + lnb3 + x -
                       v * v * (0.5 + x / 3.0 + x * x / 8.0 + x * x * x / 30.0 +
                                x * x * x * x / 144.0);
            };
            // u-sections away from the seam, v-sections across it (scaled by 1/sqrt A),
            // analytic tail e^{-V} beyond e^{33(2k+1)}.
            std::vector<double> extras = {lnb3 - std::exp(uhi)};
            LseAcc total;
            std::uint64_t panels = 0;
            {
                auto [q, n] = ladder(phi_u,
                                     {Section{std::log(T3), u0 - seam},
                                      Section{u0 + seam, uhi}},
                                     extras);
                total.add(q);
                panels += n;
            }
            {
                auto [q, n] = ladder(phi_v,
                                     {Section{-vlink, -40.0}, Section{-40.0, 40.0},
                                      Section{40.0, vlink}},
                                     {});
                total.add(q - std::log(rA));
                panels += n;
            }
            out.quadrature = LogScalar::from_log(total.log());
            out.panels = panels;
            // the chained bound: (b3/132k)(log T)^{11 k^2} plus b3 for the far tail
            out.closed_form =
                LogScalar::from_value(c.b3 / (132.0 * k)) * LogScalar::from_log(11.0 * k * k * L) +
                LogScalar::from_value(c.b3);
            break;
        }
    }
    return out;
}

LogScalar set_bound_log(SetBound label, int j, const HarperParams& hp, const RegimeParams& p) {
    hp.validate();
    p.validate();
    const double k = p.k, L = p.L;
    const auto& c = p.consts;
    const double poly = k * k * L; // log (log T)^{k^2}
    switch (label) {
        case SetBound::all_small_plain:
            return LogScalar::from_value(c.C1) * LogScalar::from_log(poly);
        case SetBound::s0_measure:
            return LogScalar::from_value(c.M) * LogScalar::from_log(-2.0 * L * L / hp.c1);
        case SetBound::all_small_full:
            return LogScalar::from_value(c.D1) * LogScalar::from_log(k + poly);
        case SetBound::sj_plain:
        case SetBound::sj_full: {
            int cap = cap_index(hp, k, L);
            if (j < 1 || j > cap - 1)
                throw precondition_error("set_bound_log: need 1 <= j <= cap-1, j=" +
                                         std::to_string(j) + " cap=" + std::to_string(cap));
            double lb = beta_log(j + 1, hp, L);
            double expo = -std::exp(-lb) * (-lb) / hp.c4();
            if (label == SetBound::sj_plain)
                return LogScalar::from_value(c.C2) * LogScalar::from_log(expo + poly);
            return LogScalar::from_value(c.D2) * LogScalar::from_log(k + expo + poly);
        }
    }
    throw precondition_error("set_bound_log: unknown label");
}

GeometricSumCheck geometric_sum_check(const HarperParams& hp, double k, double L) {
    hp.validate();
    GeometricSumCheck out;
    out.cap = cap_index(hp, k, L);
    out.hypothesis_ok = hp.c2 / hp.b() > 2.0;
    const double c4 = hp.c4();
    std::vector<double> term_logs;
    out.worst_term_log = kNegInf;
    for (int j = 1; j <= out.cap - 1; ++j) {
        double lbj = beta_log(j, hp, L);
        double lbj1 = beta_log(j + 1, hp, L);
        double t = 2.0 * k * std::exp(-lbj) - std::exp(-lbj1) * (-lbj1) / c4;
        term_logs.push_back(t);
        if (t > out.worst_term_log) {
            out.worst_term_log = t;
            out.worst_j = j;
        }
    }
    out.sum = log_sum_exp(term_logs);
    out.passes = out.sum.is_zero() || out.sum.log() <= 0.0;
    return out;
}

bool s0_exponent_check(const HarperParams& hp, double k, double L) {
    hp.validate();
    return 65.0 * k * k - 2.0 * L / hp.c1 <= 2.0 * k * k;
}

CapGapChecks cap_gap_checks(const HarperParams& hp, double k, double L) {
    hp.validate();
    CapGapChecks out;
    int cap = cap_index(hp, k, L);
    const double lnc1 = std::log(hp.c1);
    for (int j = 1; j <= cap - 1; ++j) {
        double lb = beta_log(j, hp, L);
        double gap = cap - j;
        if (gap > std::exp(-lb) / lnc1) out.statement_ok = false;
        if (gap > -lb / lnc1) out.proof_ok = false;
    }
    return out;
}

AssembledConstant assemble_log_C(const HarperParams& hp, const RegimeParams& p) {
    hp.validate();
    p.validate();
    const double k = p.k, L = p.L;
    const auto& c = p.consts;
    AssembledConstant out;
    out.cap = cap_index(hp, k, L);
    double inv_beta_cap = std::exp(-beta_log(out.cap, hp, L));
    out.term_all_small =
        LogScalar::from_value(c.D1) * LogScalar::from_log(2.0 * k * inv_beta_cap + 2.0 * k * c.N + k);
    out.term_sj = LogScalar::from_value((double)out.cap * c.D2) *
                  LogScalar::from_log(2.0 * k * c.N + k);
    double d3km = d3_coefficient(c.b1, c.b2, c.b3) * k * k * c.M;
    out.term_s0 = d3km > 0 ? LogScalar::from_log(0.5 * std::log(d3km)) : LogScalar::zero();
    out.C = out.term_all_small + out.term_sj + out.term_s0;

    if (!p.in_regime()) out.warnings.push_back("below the asymptotic regime: L < (10000 k)^2");
    if (!(hp.c2 / hp.b() > 2.0)) out.warnings.push_back("hypothesis c2/b > 2 fails");
    if (!(std::log(hp.c1) < hp.c1 / 2.0)) out.warnings.push_back("hypothesis log c1 < c1/2 fails");
    auto gs = geometric_sum_check(hp, k, L);
    if (!gs.passes) out.warnings.push_back("geometric series sum exceeds 1");
    if (!s0_exponent_check(hp, k, L)) out.warnings.push_back("Cauchy-Schwarz exponent check fails");
    auto cg = cap_gap_checks(hp, k, L);
    if (!cg.statement_ok) out.warnings.push_back("cap-gap (statement reading) fails");
    if (!cg.proof_ok) out.warnings.push_back("cap-gap (proof reading) fails");
    return out;
}

} // namespace zb
