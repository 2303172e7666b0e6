#include "zb/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "zb/errors.hpp"
#include "zb/kahan.hpp"
#include "zb/parallel.hpp"

namespace zb {
namespace {

// Odd-only segmented sieve. Segment size sized to stay in L2.
constexpr std::uint64_t kSegmentOdds = 1u << 18; // 2^18 odds = 512K numbers per segment

// Base primes up to sqrt(limit), cached and grown on demand.
std::vector<std::uint32_t>& base_primes_cache() {
    static std::vector<std::uint32_t> cache;
    return cache;
}
std::uint32_t base_limit = 0;
std::mutex base_mutex;

std::vector<std::uint32_t> simple_sieve(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    if (n < 2) return out;
    std::vector<bool> comp(n + 1, false);
    for (std::uint32_t i = 2; (std::uint64_t)i * i <= n; ++i)
        if (!comp[i])
            for (std::uint64_t j = (std::uint64_t)i * i; j <= n; j += i) comp[j] = true;
    for (std::uint32_t i = 2; i <= n; ++i)
        if (!comp[i]) out.push_back(i);
    return out;
}

const std::vector<std::uint32_t>& base_primes_for(std::uint64_t limit) {
    std::uint32_t need = (std::uint32_t)std::sqrt((double)limit) + 2;
    std::lock_guard<std::mutex> lock(base_mutex);
    if (need > base_limit) {
        base_primes_cache() = simple_sieve(need);
        base_limit = need;
    }
    return base_primes_cache();
}

// Integer sub-range [first, last] implied by the real window (lo, hi].
bool window_to_ints(const PrimeWindow& w, std::uint64_t& first, std::uint64_t& last) {
    first = (std::uint64_t)std::floor(w.lo) + 1; // smallest integer > lo
    last = (std::uint64_t)std::floor(w.hi);      // largest integer <= hi
    if (first < 2) first = 2;
    return first <= last;
}

// Sieve the odd numbers of segment [seg_lo, seg_hi] (both odd) and invoke fn
// for each prime found, ascending. Handles p = 2 at the caller.
template <class Fn>
void sieve_segment(std::uint64_t seg_lo, std::uint64_t seg_hi,
                   const std::vector<std::uint32_t>& base, Fn&& fn) {
    std::uint64_t n_odds = (seg_hi - seg_lo) / 2 + 1;
    std::vector<std::uint8_t> comp(n_odds, 0);
    for (std::uint32_t p : base) {
        if (p == 2) continue;
        std::uint64_t p2 = (std::uint64_t)p * p;
        if (p2 > seg_hi) break;
        std::uint64_t start = p2;
        if (start < seg_lo) {
            std::uint64_t r = seg_lo % p;
            start = r ? seg_lo + (p - r) : seg_lo;
            if ((start & 1) == 0) start += p;
        }
        for (std::uint64_t m = start; m <= seg_hi; m += 2 * p) comp[(m - seg_lo) / 2] = 1;
    }
    for (std::uint64_t i = 0; i < n_odds; ++i)
        if (!comp[i]) fn(seg_lo + 2 * i);
}

} // namespace

void check_window(const PrimeWindow& w, double capacity) {
    if (!(w.lo >= 1.0) || !(w.lo < w.hi) || !std::isfinite(w.hi))
        throw precondition_error("prime window requires 1 <= lo < hi, got (" +
                                 std::to_string(w.lo) + ", " + std::to_string(w.hi) + "]");
    // small relative slack: window bounds come through exp/log round trips
    if (w.hi > capacity * (1.0 + 1e-9))
        throw capacity_error("prime window upper bound " + std::to_string(w.hi) +
                             " exceeds sieve capacity " + std::to_string(capacity));
}

void for_primes_in(const PrimeWindow& w, double capacity,
                   const std::function<void(std::uint64_t)>& fn) {
    check_window(w, capacity);
    std::uint64_t first, last;
    if (!window_to_ints(w, first, last)) return;
    const auto& base = base_primes_for(last);
    if (first <= 2 && last >= 2) fn(2);
    std::uint64_t lo = std::max<std::uint64_t>(first, 3);
    if ((lo & 1) == 0) ++lo;
    std::uint64_t hi = last;
    if (hi >= 3 && (hi & 1) == 0) --hi;
    for (std::uint64_t seg = lo; seg <= hi; seg += 2 * kSegmentOdds) {
        std::uint64_t seg_hi = std::min(hi, seg + 2 * kSegmentOdds - 2);
        sieve_segment(seg, seg_hi, base, fn);
    }
}

std::vector<std::uint64_t> primes_in(const PrimeWindow& w, double capacity) {
    std::vector<std::uint64_t> out;
    for_primes_in(w, capacity, [&](std::uint64_t p) { out.push_back(p); });
    return out;
}

double sum_prime_reciprocals(const PrimeWindow& w, double capacity) {
    check_window(w, capacity);
    std::uint64_t first, last;
    if (!window_to_ints(w, first, last)) return 0.0;
    const auto& base = base_primes_for(last);

    double two = (first <= 2 && last >= 2) ? 0.5 : 0.0;
    std::uint64_t lo = std::max<std::uint64_t>(first, 3);
    if ((lo & 1) == 0) ++lo;
    std::uint64_t hi = last;
    if (hi >= 3 && (hi & 1) == 0) --hi;
    if (lo > hi) return two;

    std::uint64_t span = (hi - lo) / 2 + 1; // odd count
    std::uint64_t n_segs = (span + kSegmentOdds - 1) / kSegmentOdds;
    std::vector<double> partial(n_segs, 0.0);
    for_each_chunk(n_segs, [&](std::size_t s) {
        std::uint64_t seg_lo = lo + 2 * kSegmentOdds * s;
        std::uint64_t seg_hi = std::min(hi, seg_lo + 2 * kSegmentOdds - 2);
        kahan_sum acc;
        sieve_segment(seg_lo, seg_hi, base,
                      [&](std::uint64_t p) { acc.add(1.0 / (double)p); });
        partial[s] = acc.value();
    });
    kahan_sum total;
    total.add(two);
    for (double v : partial) total.add(v); // fixed merge order
    return total.value();
}

MertensWindow mertens_window(double x, double c, double capacity) {
    if (!(x >= 100.0))
        throw precondition_error("mertens_window requires x >= 100");
    if (!(c > 1.0))
        throw precondition_error("mertens_window requires c > 1");
    double hi = std::exp(c * std::log(x));
    PrimeWindow w{x, hi};
    MertensWindow r;
    r.sum = sum_prime_reciprocals(w, capacity);
    r.expected = std::log(c);
    r.deviation = r.sum - r.expected;
    return r;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) { return simple_sieve(n); }

} // namespace zb
