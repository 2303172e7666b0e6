#include "zb/zeta.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "zb/errors.hpp"

namespace zb {
namespace {

using ld = long double;
using cd = std::complex<double>;
constexpr ld kPi = 3.14159265358979323846264338327950288L;
constexpr ld kTwoPi = 2.0L * kPi;

// ---------------------------------------------------------------------------
// Euler-Maclaurin continuation, used below the Riemann-Siegel switchover.
// ---------------------------------------------------------------------------

constexpr double kSwitchoverT = 50.0;

const ld kBern2r[] = {// B_2, B_4, ..., B_28
                      1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66,
                      -691.0L / 2730, 7.0L / 6, -3617.0L / 510, 43867.0L / 798,
                      -174611.0L / 330, 854513.0L / 138, -236364091.0L / 2730,
                      8553103.0L / 6, -23749461029.0L / 870};

std::complex<ld> zeta_euler_maclaurin(ld t) {
    const std::complex<ld> s(0.5L, t);
    const long N = (long)(2.5L * std::fabs((double)t)) + 60;
    std::complex<ld> sum(0.0L, 0.0L);
    for (long n = 1; n < N; ++n) {
        ld ln = std::log((ld)n);
        ld a = 1.0L / std::sqrt((ld)n);
        sum += std::complex<ld>(a * std::cos(t * ln), -a * std::sin(t * ln));
    }
    const ld lnN = std::log((ld)N);
    const std::complex<ld> Nms(std::exp(-0.5L * lnN) * std::cos(t * lnN),
                               -std::exp(-0.5L * lnN) * std::sin(t * lnN));
    sum += Nms * (ld)N / (s - std::complex<ld>(1.0L, 0.0L)); // N^{1-s}/(s-1)
    sum += Nms * 0.5L;
    std::complex<ld> poch = s;           // s (s+1) ... (s+2r-2)
    std::complex<ld> Npow = Nms / (ld)N; // N^{-s-2r+1}
    ld fact = 2.0L;                      // (2r)!
    for (int r = 1; r <= 14; ++r) {
        std::complex<ld> term = kBern2r[r - 1] / fact * poch * Npow;
        sum += term;
        if (std::abs(term) < 1e-22L * std::abs(sum)) break;
        poch *= (s + std::complex<ld>(2.0L * r - 1, 0)) * (s + std::complex<ld>(2.0L * r, 0));
        Npow /= (ld)N * (ld)N;
        fact *= (2.0L * r + 1) * (2.0L * r + 2);
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Riemann-Siegel correction terms.
//
// The remainder of the main sum expands as
//   (-1)^{m+1} tau^{-1/2} sum_j C_j(p) tau^{-j},  tau = sqrt(t/2pi), p = frac(tau),
// with C_j built from derivatives of Psi(p) = cos(2pi(p^2-p-1/16))/cos(2pi p):
//   C0 =  Psi
//   C1 = -Psi^(3)/(96 pi^2)
//   C2 =  Psi^(2)/(64 pi^2) + Psi^(6)/(18432 pi^4)
//   C3 = -Psi^(1)/(64 pi^2) - Psi^(5)/(3840 pi^4) - Psi^(9)/(5308416 pi^6)
//   C4 =  Psi/(128 pi^2) + 19 Psi^(4)/(24576 pi^4) + 11 Psi^(8)/(5898240 pi^6)
//        + Psi^(12)/(2293235712 pi^8)
//
// Psi is entire; its derivatives are taken from Taylor series centred at the
// removable singularities p = 1/4 and p = 3/4, where both cosines vanish and
// the leading zero cancels exactly.
// ---------------------------------------------------------------------------

constexpr int kSerOrder = 34;
using Ser = std::array<ld, kSerOrder + 1>;

Ser ser_mul(const Ser& a, const Ser& b) {
    Ser r{};
    for (int i = 0; i <= kSerOrder; ++i)
        for (int j = 0; i + j <= kSerOrder; ++j) r[i + j] += a[i] * b[j];
    return r;
}

void ser_axpy(Ser& acc, const Ser& a, ld c) {
    for (int i = 0; i <= kSerOrder; ++i) acc[i] += a[i] * c;
}

// cos(A + u(h)) as a series in h, where u is a polynomial with u(0) = 0.
Ser cos_of(ld A, const Ser& u) {
    Ser cu{}, su{}, upow{};
    upow[0] = 1;
    ld fact = 1;
    for (int m = 0; m <= kSerOrder; ++m) {
        if (m > 0) {
            upow = ser_mul(upow, u);
            fact *= m;
        }
        switch (m % 4) {
            case 0: ser_axpy(cu, upow, 1 / fact); break;
            case 1: ser_axpy(su, upow, 1 / fact); break;
            case 2: ser_axpy(cu, upow, -1 / fact); break;
            case 3: ser_axpy(su, upow, -1 / fact); break;
        }
    }
    Ser out{};
    ser_axpy(out, cu, std::cos(A));
    ser_axpy(out, su, -std::sin(A));
    return out;
}

Ser ser_div(const Ser& n, const Ser& d) {
    Ser q{};
    for (int k = 0; k <= kSerOrder; ++k) {
        ld acc = n[k];
        for (int i = 0; i < k; ++i) acc -= q[i] * d[k - i];
        q[k] = acc / d[0];
    }
    return q;
}

// Taylor coefficients of Psi about c in {1/4, 3/4}.
Ser psi_series_at(ld c) {
    Ser u{};
    u[1] = kTwoPi * (2 * c - 1);
    u[2] = kTwoPi;
    Ser num = cos_of(kTwoPi * (c * c - c - 1.0L / 16), u);
    Ser w{};
    w[1] = kTwoPi;
    Ser den = cos_of(kTwoPi * c, w);
    num[0] = 0; // exact zeros at the centres
    den[0] = 0;
    Ser n2{}, d2{};
    for (int i = 0; i < kSerOrder; ++i) {
        n2[i] = num[i + 1];
        d2[i] = den[i + 1];
    }
    return ser_div(n2, d2);
}

// Psi, Psi', ..., Psi^(12) at p in [0,1).
std::array<ld, 13> psi_derivatives(ld p) {
    static const Ser ser14 = psi_series_at(0.25L);
    static const Ser ser34 = psi_series_at(0.75L);
    const bool low = p < 0.5L;
    const Ser& q = low ? ser14 : ser34;
    const ld h = p - (low ? 0.25L : 0.75L);
    std::array<ld, 13> out{};
    for (int m = 0; m <= 12; ++m) {
        ld acc = 0, hp = 1;
        for (int k = m; k <= kSerOrder; ++k) {
            ld fall = 1;
            for (int j = 0; j < m; ++j) fall *= k - j;
            acc += q[k] * fall * hp;
            hp *= h;
        }
        out[m] = acc;
    }
    return out;
}

ld theta_ld(ld t) {
    const ld t2 = t * t;
    return t / 2 * std::log(t / kTwoPi) - t / 2 - kPi / 8 + 1.0L / (48 * t) +
           7.0L / (5760 * t * t2) + 31.0L / (80640 * t * t2 * t2) +
           127.0L / (430080 * t * t2 * t2 * t2);
}

// log n and 1/sqrt(n) tables for the main sum, grown on demand per thread.
struct MainSumTables {
    std::vector<double> ln, rsqrt;
    void ensure(long m) {
        if ((long)ln.size() > m) return;
        long base = ln.empty() ? 1 : (long)ln.size();
        if (ln.empty()) {
            ln.push_back(0);
            rsqrt.push_back(0); // n = 0 placeholder
            base = 1;
        }
        for (long n = base; n <= m; ++n) {
            ln.push_back(std::log((double)n));
            rsqrt.push_back(1.0 / std::sqrt((double)n));
        }
    }
};

double wrap_phase(ld x) {
    // reduce to [-pi, pi] in long double, return double
    ld k = std::nearbyint(x / kTwoPi);
    return (double)(x - k * kTwoPi);
}

std::complex<double> zeta_riemann_siegel(double t) {
    thread_local MainSumTables tab;
    const ld tau = std::sqrt((ld)t / kTwoPi);
    const long m = (long)tau;
    const ld p = tau - (ld)m;
    tab.ensure(m);

    const ld th = theta_ld(t);
    double Z = 0.0;
    for (long n = 1; n <= m; ++n)
        Z += tab.rsqrt[n] * std::cos(wrap_phase(th - (ld)t * (ld)tab.ln[n]));
    Z *= 2.0;

    const auto ps = psi_derivatives(p);
    const ld p2 = kPi * kPi;
    const ld c0 = ps[0];
    const ld c1 = -ps[3] / (96 * p2);
    const ld c2 = ps[2] / (64 * p2) + ps[6] / (18432 * p2 * p2);
    const ld c3 = -ps[1] / (64 * p2) - ps[5] / (3840 * p2 * p2) -
                  ps[9] / (5308416.0L * p2 * p2 * p2);
    const ld c4 = ps[0] / (128 * p2) + 19.0L * ps[4] / (24576 * p2 * p2) +
                  11.0L * ps[8] / (5898240.0L * p2 * p2 * p2) +
                  ps[12] / (2293235712.0L * p2 * p2 * p2 * p2);
    const ld rtau = 1.0L / tau;
    const ld corr = c0 + rtau * (c1 + rtau * (c2 + rtau * (c3 + rtau * c4)));
    const ld sign = (m % 2 == 0) ? -1.0L : 1.0L; // (-1)^{m+1}
    Z += (double)(sign * corr / std::sqrt(tau));

    const double thd = wrap_phase(th);
    return cd(Z * std::cos(thd), -Z * std::sin(thd)); // zeta = Z e^{-i theta}
}

} // namespace

double riemann_siegel_theta(double t) {
    if (!(t > 0)) throw precondition_error("riemann_siegel_theta requires t > 0");
    return (double)theta_ld((ld)t);
}

std::complex<double> zeta_half(double t) {
    if (!std::isfinite(t) || std::fabs(t) > kZetaMaxT)
        throw precondition_error("zeta_half: t out of range [-1e8, 1e8]: " +
                                 std::to_string(t));
    if (t < 0) return std::conj(zeta_half(-t));
    if (t < kSwitchoverT) {
        auto z = zeta_euler_maclaurin((ld)t);
        return cd((double)z.real(), (double)z.imag());
    }
    return zeta_riemann_siegel(t);
}

LogAbsZeta log_abs_zeta(double t) {
    const double a = std::abs(zeta_half(t));
    LogAbsZeta r;
    if (a < 1e-6) {
        r.near_zero = true;
        r.value = (a > 0) ? std::max(std::log(a), -50.0) : -50.0;
    } else {
        r.value = std::log(a);
    }
    return r;
}

} // namespace zb
