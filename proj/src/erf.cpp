#include "zb/erf.hpp"

#include <cmath>

namespace zb {
namespace {

const double kTwoOverSqrtPi = 1.1283791670955125738961589031;

// erf(x) = (2/sqrt(pi)) e^{-x^2} sum_{n>=0} (2x^2)^n x / (2n+1)!!
// All terms positive, no cancellation.
double erf_series(double x) {
    double x2 = x * x;
    double term = x;
    double sum = x;
    double denom = 1.0;
    for (int n = 1; n < 200; ++n) {
        denom += 2.0;
        term *= 2.0 * x2 / denom;
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return kTwoOverSqrtPi * std::exp(-x2) * sum;
}

// erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// for x > 0, modified Lentz.
double erfc_cf(double x) {
    const double tiny = 1e-300;
    double f = x, C = x, D = 0.0;
    for (int n = 1; n < 300; ++n) {
        double a = n / 2.0;
        D = x + a * D;
        if (D == 0.0) D = tiny;
        C = x + a / C;
        if (C == 0.0) C = tiny;
        D = 1.0 / D;
        double delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-17) break;
    }
    return std::exp(-x * x) / std::sqrt(M_PI) / f;
}

} // namespace

double erf(double x) {
    if (x < 0) return -zb::erf(-x);
    if (x <= 3.0) return erf_series(x);
    return 1.0 - erfc_cf(x);
}

double erfc(double x) {
    if (x < 0) return 2.0 - zb::erfc(-x);
    if (x <= 3.0) return 1.0 - erf_series(x);
    return erfc_cf(x);
}

} // namespace zb
