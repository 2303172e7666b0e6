#pragma once
// The conjectural moment constants c_k = a_k * f_k: a truncated Euler
// product over primes times the random-matrix limit factor.

#include <cstdint>
#include <optional>

namespace zb {

// a_k: product over p <= cutoff of
//   (1 - 1/p)^{k^2} * sum_m (Gamma(m+k)/(m! Gamma(k)))^2 p^{-m},
// inner series truncated below 1e-15 relative, log-space accumulation.
// Requires k >= 0 and cutoff >= 1e3.
double arithmetic_factor(double k, std::uint64_t prime_cutoff);

struct RmtFactor {
    double limit = 0.0;  // Richardson extrapolation across N and 2N
    double at_N = 0.0;   // plain value at N
    double at_2N = 0.0;  // plain value at 2N
    std::optional<double> closed_form; // prod_{j=0}^{k-1} j!/(j+k)! for integer k
};

// f_k = lim N^{-k^2} prod_{j=1}^{N} Gamma(j) Gamma(j+2k) / Gamma(j+k)^2,
// log-gamma accumulated in log space. Requires k >= 0 and N >= 100.
RmtFactor rmt_factor(double k, std::uint64_t matrix_cutoff);

struct KSCutoffs {
    std::uint64_t prime_cutoff = 1000000;
    std::uint64_t matrix_cutoff = 2000;
};

struct KSResult {
    double k = 0.0;
    double a_k = 0.0;
    double f_k = 0.0;
    double c_k = 0.0; // a_k * f_k
    std::uint64_t prime_cutoff = 0;
    std::uint64_t matrix_cutoff = 0;
};

KSResult moment_constant(double k, const KSCutoffs& cutoffs = {});

} // namespace zb
