#include "zb/ks_constants.hpp"

#include <cmath>

#include "zb/errors.hpp"
#include "zb/kahan.hpp"
#include "zb/parallel.hpp"
#include "zb/primes.hpp"

namespace zb {
namespace {

// log of the local factor at p: k^2 log(1-1/p) + log sum_m r_m^2 p^{-m},
// where r_m = Gamma(m+k)/(m! Gamma(k)) via r_0 = 1, r_{m+1} = r_m (m+k)/(m+1).
double log_local_factor(double k, double p) {
    double r = 1.0;
    double pm = 1.0;
    double sum = 1.0; // m = 0 term
    for (int m = 0; m < 2000; ++m) {
        r *= (m + k) / (m + 1.0);
        pm /= p;
        double term = r * r * pm;
        sum += term;
        if (term < 1e-15 * sum) break;
    }
    return k * k * std::log1p(-1.0 / p) + std::log(sum);
}

double log_rmt_at(double k, std::uint64_t N) {
    // -k^2 log N + sum_{j=1}^{N} [lgamma(j) + lgamma(j+2k) - 2 lgamma(j+k)]
    const std::size_t chunk = 4096;
    std::size_t n_chunks = (N + chunk - 1) / chunk;
    std::vector<double> partial(n_chunks, 0.0);
    for_each_range_chunk(N, chunk, [&](std::size_t b, std::size_t e, std::size_t c) {
        kahan_sum acc;
        for (std::size_t i = b; i < e; ++i) {
            double j = (double)(i + 1);
            acc.add(std::lgamma(j) + std::lgamma(j + 2 * k) - 2.0 * std::lgamma(j + k));
        }
        partial[c] = acc.value();
    });
    kahan_sum total;
    for (double v : partial) total.add(v);
    return total.value() - k * k * std::log((double)N);
}

} // namespace

double arithmetic_factor(double k, std::uint64_t prime_cutoff) {
    if (!(k >= 0.0)) throw precondition_error("arithmetic_factor requires k >= 0");
    if (prime_cutoff < 1000)
        throw precondition_error("arithmetic_factor: prime cutoff too small (>= 1e3)");
    auto primes = primes_up_to((std::uint32_t)prime_cutoff);
    const std::size_t chunk = 4096;
    std::size_t n_chunks = (primes.size() + chunk - 1) / chunk;
    std::vector<double> partial(n_chunks, 0.0);
    for_each_range_chunk(primes.size(), chunk, [&](std::size_t b, std::size_t e, std::size_t c) {
        kahan_sum acc;
        for (std::size_t i = b; i < e; ++i) acc.add(log_local_factor(k, (double)primes[i]));
        partial[c] = acc.value();
    });
    kahan_sum total;
    for (double v : partial) total.add(v);
    return std::exp(total.value());
}

RmtFactor rmt_factor(double k, std::uint64_t matrix_cutoff) {
    if (!(k >= 0.0)) throw precondition_error("rmt_factor requires k >= 0");
    if (matrix_cutoff < 100) throw precondition_error("rmt_factor requires N >= 100");
    RmtFactor r;
    double lN = log_rmt_at(k, matrix_cutoff);
    double l2N = log_rmt_at(k, 2 * matrix_cutoff);
    r.at_N = std::exp(lN);
    r.at_2N = std::exp(l2N);
    r.limit = std::exp(2.0 * l2N - lN); // cancels the 1/N term
    if (k == std::floor(k) && k >= 0) {
        int ki = (int)k;
        if (ki <= 8) {
            // prod_{j=0}^{k-1} j!/(j+k)! = prod_j 1/((j+1)(j+2)...(j+k)),
            // each denominator exact in 64 bits for k <= 8
            double f = 1.0;
            for (int j = 0; j < ki; ++j) {
                std::uint64_t den = 1;
                for (int i = 1; i <= ki; ++i) den *= (std::uint64_t)(j + i);
                f /= (double)den;
            }
            r.closed_form = f;
        } else {
            double lg = 0.0;
            for (int j = 0; j < ki; ++j)
                lg += std::lgamma(j + 1.0) - std::lgamma(j + ki + 1.0);
            r.closed_form = std::exp(lg);
        }
    }
    return r;
}

KSResult moment_constant(double k, const KSCutoffs& cutoffs) {
    KSResult res;
    res.k = k;
    res.a_k = arithmetic_factor(k, cutoffs.prime_cutoff);
    auto f = rmt_factor(k, cutoffs.matrix_cutoff);
    res.f_k = f.closed_form ? *f.closed_form : f.limit;
    res.c_k = res.a_k * res.f_k;
    res.prime_cutoff = cutoffs.prime_cutoff;
    res.matrix_cutoff = cutoffs.matrix_cutoff;
    return res;
}

} // namespace zb
