#pragma once
// Numerical moments of |zeta(1/2+it)| over [T, 2T] and empirical
// large-value measures.

#include <cstdint>
#include <vector>

#include "zb/sample_cache.hpp"

namespace zb {

enum class MomentMethod { monte_carlo, quadrature };

struct MomentEstimate {
    double k = 0.0;
    double T = 0.0;
    double value = 0.0;     // estimate of (1/T) integral over [T,2T] of |zeta|^{2k}
    double std_error = 0.0; // jackknife (MC) or embedded quadrature error estimate
    std::uint64_t n = 0;    // samples (MC) or grid points (quadrature)
    MomentMethod method = MomentMethod::monte_carlo;
    std::uint64_t seed = 0;
};

// Stratified Monte Carlo: n equal-width strata over [T, 2T], one uniform
// point per stratum, jackknife standard error. Deterministic per seed for
// any worker count. Requires 0 <= k <= 3, 1e3 <= T <= 1e7, n >= 1e3.
MomentEstimate moment_mc(double k, double T, std::uint64_t n, std::uint64_t seed,
                         SampleCache* cache = nullptr);

// Composite Simpson over [T, 2T]. Requires k in {1, 2}, 1e3 <= T <= 2e5,
// 0 < step <= 0.05. std_error holds the embedded coarse-grid error estimate.
MomentEstimate moment_quadrature(double k, double T, double step,
                                 SampleCache* cache = nullptr);

struct LargeValueQuery {
    double T = 1e6;
    double V = 0.0; // any finite threshold
};

struct LargeValueMeasure {
    double fraction = 0.0; // empirical share of t in [T,2T] with log|zeta| >= V
    double std_error = 0.0;
    std::uint64_t count = 0;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
};

// Same sampling plan as moment_mc.
LargeValueMeasure large_value_measure(const LargeValueQuery& q, std::uint64_t n,
                                      std::uint64_t seed, SampleCache* cache = nullptr);

// The t grid and samples moment_mc would use; exposed so property tests can
// examine one fixed sample set under several k.
std::vector<double> mc_sample_points(double T, std::uint64_t n, std::uint64_t seed);

} // namespace zb
