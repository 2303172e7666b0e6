#include "zb/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zb/errors.hpp"
#include "zb/kahan.hpp"

namespace zb {
namespace {

void check_config(const SmoothedPolyConfig& c) {
    if (!(c.beta_im1 >= 0.0 && c.beta_im1 < c.beta_i && c.beta_i <= c.beta_j))
        throw precondition_error("g_sum requires 0 <= beta_{i-1} < beta_i <= beta_j");
    if (!(c.T >= 1e3)) throw precondition_error("g_sum requires T >= 1e3");
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

std::complex<double> g_sum(const SmoothedPolyConfig& cfg, double t, double capacity) {
    check_config(cfg);
    if (!(t >= 0)) throw precondition_error("g_sum requires t >= 0");
    const double logT = std::log(cfg.T);
    const double smooth_log = cfg.beta_j * logT; // log(T^{beta_j})
    const double sigma = 0.5 + 1.0 / smooth_log;
    PrimeWindow w{std::exp(cfg.beta_im1 * logT), std::exp(cfg.beta_i * logT)};
    if (w.lo < 1.0) w.lo = 1.0;
    if (!(w.lo < w.hi)) return {0.0, 0.0};

    kahan_sum re, im;
    for_primes_in(w, capacity, [&](std::uint64_t p) {
        double lp = std::log((double)p);
        double amp = std::exp(-sigma * lp) * (1.0 - lp / smooth_log);
        double ph = t * lp;
        re.add(amp * std::cos(ph));
        im.add(-amp * std::sin(ph));
    });
    return {re.value(), im.value()};
}

MajorantRhs majorant_rhs(double t, double x, double T, double N, double capacity) {
    if (!(x >= 2.0 && x <= T * T))
        throw precondition_error("majorant_rhs requires 2 <= x <= T^2");
    if (!(t >= 10.0)) throw precondition_error("majorant_rhs requires t >= 10");

    const double logx = std::log(x);
    const double sigma = 0.5 + 1.0 / logx;
    kahan_sum acc;
    for_primes_in(PrimeWindow{1.0, x}, capacity, [&](std::uint64_t p) {
        double lp = std::log((double)p);
        acc.add(std::exp(-sigma * lp) * (1.0 - lp / logx) * std::cos(t * lp));
    });
    const double cut2 = std::min(std::sqrt(x), std::log(T));
    if (cut2 >= 2.0) {
        for_primes_in(PrimeWindow{1.0, cut2}, capacity, [&](std::uint64_t p) {
            double lp = std::log((double)p);
            acc.add(0.5 * std::exp(-lp) * std::cos(2.0 * t * lp));
        });
    }
    MajorantRhs r;
    r.value = acc.value() + std::log(T) / logx + N;
    r.in_regime = (t >= T && t <= 2.0 * T);
    return r;
}

double f_of_n(const Factorization& fac) {
    std::uint64_t last = 1;
    for (const auto& pp : fac) {
        if (pp.exponent < 1) throw precondition_error("f_of_n: exponent must be >= 1");
        if (pp.prime <= last) throw precondition_error("f_of_n: primes must be strictly increasing");
        if (!is_prime_u64(pp.prime)) throw precondition_error("f_of_n: non-prime base");
        last = pp.prime;
    }
    double out = 1.0;
    for (const auto& pp : fac) {
        if (pp.exponent % 2 != 0) return 0.0;
        // (1/2^a) a!/((a/2)!)^2 = binom(a, a/2)/2^a, a dyadic rational
        std::uint32_t a = pp.exponent;
        double v;
        if (a <= 60) {
            std::uint64_t binom = 1;
            for (std::uint32_t i = 0; i < a / 2; ++i) binom = binom * (a - i) / (i + 1);
            v = std::ldexp((double)binom, -(int)a);
        } else {
            v = std::exp(std::lgamma(a + 1.0) - 2.0 * std::lgamma(a / 2 + 1.0) -
                         a * std::log(2.0));
        }
        out *= v;
    }
    return out;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw precondition_error("factorize(0)");
    Factorization fac;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        fac.push_back({p, e});
    }
    if (n > 1) fac.push_back({n, 1});
    return fac;
}

double cos_product_mean(const std::vector<std::uint64_t>& primes, double T_int) {
    if (!(T_int > 0) || T_int > 1e7)
        throw precondition_error("cos_product_mean requires 0 < T <= 1e7");
    long double prod = 1.0L;
    for (auto p : primes) {
        if (!is_prime_u64(p)) throw precondition_error("cos_product_mean: non-prime entry");
        prod *= (long double)p;
    }
    if ((double)prod > std::exp(0.4 * std::log(T_int)))
        throw regime_error("cos_product_mean: prime product exceeds T^0.4");

    const std::size_t m = primes.size();
    if (m == 0) return 1.0;

    if (m <= 12) {
        // prod cos(a_i t) = 2^{-m} sum over sign patterns of cos(t log(num/den));
        // the frequency is exactly zero iff num == den, tested on integers.
        const std::size_t patterns = std::size_t{1} << m;
        kahan_sum acc;
        for (std::size_t mask = 0; mask < patterns; ++mask) {
            std::uint64_t num = 1, den = 1;
            for (std::size_t i = 0; i < m; ++i)
                (mask >> i & 1 ? num : den) *= primes[i];
            if (num == den) {
                acc.add(1.0);
            } else {
                double c = std::log((double)num) - std::log((double)den);
                acc.add(std::sin(c * T_int) / (c * T_int));
            }
        }
        return std::ldexp(acc.value(), -(int)m);
    }

    // composite Simpson fallback
    std::vector<double> lp(m);
    for (std::size_t i = 0; i < m; ++i) lp[i] = std::log((double)primes[i]);
    auto f = [&](double t) {
        double v = 1.0;
        for (double l : lp) v *= std::cos(t * l);
        return v;
    };
    const double h = 0.005;
    const std::size_t n = 2 * (std::size_t)(T_int / (2 * h)) + 2;
    const double hh = T_int / (double)n;
    kahan_sum s;
    s.add(f(0.0));
    s.add(f(T_int));
    for (std::size_t i = 1; i < n; ++i) s.add((i % 2 ? 4.0 : 2.0) * f(i * hh));
    return s.value() * hh / 3.0 / T_int;
}

} // namespace zb
