#pragma once
// zeta(1/2 + it) on the critical line: Euler-Maclaurin for small t,
// Riemann-Siegel main sum with correction terms C0..C4 above t = 50.

#include <complex>

namespace zb {

// Largest ordinate the evaluator accepts. Negative t is mapped through
// conjugate symmetry: zeta(1/2 - it) = conj(zeta(1/2 + it)).
constexpr double kZetaMaxT = 1e8;

// zeta(1/2 + it). Relative accuracy ~1e-7 or better for |t| <= 1e6.
// Throws precondition_error for |t| > kZetaMaxT or non-finite t.
std::complex<double> zeta_half(double t);

// Riemann-Siegel theta(t) = arg Gamma(1/4 + it/2) - (t/2) log pi, for t > 0,
// via the Stirling series.
double riemann_siegel_theta(double t);

struct LogAbsZeta {
    double value = 0.0;    // log|zeta(1/2+it)|, clamped below at -50
    bool near_zero = false; // |zeta| under the evaluator's trust radius (1e-6)
};

// log of |zeta_half(t)|. Near a zero the magnitude falls below what the
// evaluator can resolve; the flag marks those points and the value is
// clamped at -50.
LogAbsZeta log_abs_zeta(double t);

} // namespace zb
