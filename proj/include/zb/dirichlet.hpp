#pragma once
// Smoothed prime Dirichlet polynomials G_{(i,j)}(t), the conditional
// majorant for log|zeta|, the multiplicative square-supported function f,
// and the mean value of products of cos(t log p).

#include <complex>
#include <cstdint>
#include <vector>

#include "zb/primes.hpp"

namespace zb {

// One smoothed polynomial: primes in (T^{beta_im1}, T^{beta_i}], smoothing
// scale T^{beta_j}.
struct SmoothedPolyConfig {
    double T = 1e3;
    double beta_im1 = 0.0; // lower window exponent (>= 0)
    double beta_i = 0.5;   // upper window exponent
    double beta_j = 0.5;   // smoothing exponent, >= beta_i
};

// sum over T^{beta_im1} < p <= T^{beta_i} of
//   p^{-(1/2 + 1/(beta_j log T) + it)} * log(T^{beta_j}/p) / log(T^{beta_j})
std::complex<double> g_sum(const SmoothedPolyConfig& cfg, double t,
                           double capacity = kDefaultSieveCapacity);

struct MajorantRhs {
    double value = 0.0;
    bool in_regime = false; // T <= t <= 2T; desk-scale t outside is accepted but flagged
};

// Right-hand side of the conditional bound on log|zeta(1/2+it)|:
//   Re( sum_{p<=x} p^{-(1/2+1/log x+it)} log(x/p)/log x
//     + sum_{p<=min(sqrt x, log T)} (1/2) p^{-1-2it} ) + log T/log x + N
// Requires 2 <= x <= T^2 and t >= 10.
MajorantRhs majorant_rhs(double t, double x, double T, double N = 0.0,
                         double capacity = kDefaultSieveCapacity);

struct PrimePower {
    std::uint64_t prime = 2;
    std::uint32_t exponent = 1;
};

// n = p1^a1 ... pr^ar with primes strictly increasing, exponents >= 1.
using Factorization = std::vector<PrimePower>;

// f(n): 0 if any exponent is odd, else prod (1/2^a) a!/((a/2)!)^2.
// Multiplicative, supported on squares, 0 <= f <= 1, f(p^2) = 1/2.
double f_of_n(const Factorization& fac);

// Factorisation by trial division; helper for tests and the CLI.
Factorization factorize(std::uint64_t n);

// (1/T) * integral over [0, T] of prod cos(t log p) dt.
// Exact product-to-sum expansion for multisets of <= 12 primes, composite
// Simpson otherwise. Requires prod p <= exp(0.4 log T) and T <= 1e7.
double cos_product_mean(const std::vector<std::uint64_t>& primes, double T_int);

} // namespace zb
