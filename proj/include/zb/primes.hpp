#pragma once
// Prime enumeration over half-open real windows (lo, hi] and the
// prime-reciprocal sums every Dirichlet polynomial is built from.

#include <cstdint>
#include <functional>
#include <vector>

namespace zb {

// Half-open window (lo, hi]: membership is p > lo && p <= hi with exact
// integer p tested against the real bounds (windows come from T^beta with
// fractional beta).
struct PrimeWindow {
    double lo = 1.0;
    double hi = 2.0;
};

// Default sieve capacity. Windows past this raise capacity_error unless the
// caller passes a larger capacity explicitly.
constexpr double kDefaultSieveCapacity = 1e9;

// Throws precondition_error unless 1 <= lo < hi, capacity_error if hi exceeds
// the capacity.
void check_window(const PrimeWindow& w, double capacity = kDefaultSieveCapacity);

// All primes p with lo < p <= hi, ascending.
std::vector<std::uint64_t> primes_in(const PrimeWindow& w,
                                     double capacity = kDefaultSieveCapacity);

// Streams primes in (lo, hi] ascending into fn without materialising them.
void for_primes_in(const PrimeWindow& w, double capacity,
                   const std::function<void(std::uint64_t)>& fn);

// Sum of 1/p over the window, compensated summation. Deterministic for any
// worker count.
double sum_prime_reciprocals(const PrimeWindow& w,
                             double capacity = kDefaultSieveCapacity);

// Mertens-style window check: sum of 1/p over (x, x^c] against log c.
struct MertensWindow {
    double sum = 0.0;       // observed sum of 1/p over (x, x^c]
    double expected = 0.0;  // log c
    double deviation = 0.0; // sum - expected
};

// Requires x >= 100, c > 1 and x^c within capacity.
MertensWindow mertens_window(double x, double c,
                             double capacity = kDefaultSieveCapacity);

// Primes up to n (inclusive), plain sieve. Small-n helper used by the
// arithmetic Euler products and factorisation utilities.
std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

} // namespace zb
