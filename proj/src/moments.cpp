#include "zb/moments.hpp"

#include <cmath>
#include <string>

#include "zb/errors.hpp"
#include "zb/kahan.hpp"
#include "zb/parallel.hpp"
#include "zb/rng.hpp"
#include "zb/zeta.hpp"

namespace zb {
namespace {

constexpr std::size_t kChunk = 4096;

void check_mc_ranges(double k, double T, std::uint64_t n) {
    if (!(k >= 0.0 && k <= 3.0))
        throw precondition_error("moment_mc requires 0 <= k <= 3 (higher moments do not "
                                 "converge at reachable sample sizes)");
    if (!(T >= 1e3 && T <= 1e7)) throw precondition_error("moment_mc requires 1e3 <= T <= 1e7");
    if (n < 1000) throw precondition_error("moment_mc requires n >= 1e3");
}

double integrand(double abs2, double k) {
    if (k == 0.0) return 1.0;
    if (k == 1.0) return abs2;
    if (k == 2.0) return abs2 * abs2;
    return std::pow(abs2, k);
}

// |zeta|^2 at the given points, cache-aware, deterministic for any worker count.
std::vector<double> sample_abs2(const std::vector<double>& ts, SampleCache* cache) {
    std::vector<double> abs2(ts.size());
    if (!cache) {
        for_each_range_chunk(ts.size(), kChunk, [&](std::size_t b, std::size_t e, std::size_t) {
            for (std::size_t i = b; i < e; ++i) abs2[i] = std::norm(zeta_half(ts[i]));
        });
        return abs2;
    }
    std::vector<std::size_t> missing;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (auto z = cache->lookup(ts[i]))
            abs2[i] = std::norm(*z);
        else
            missing.push_back(i);
    }
    std::vector<std::complex<double>> fresh(missing.size());
    for_each_range_chunk(missing.size(), kChunk, [&](std::size_t b, std::size_t e, std::size_t) {
        for (std::size_t i = b; i < e; ++i) fresh[i] = zeta_half(ts[missing[i]]);
    });
    for (std::size_t i = 0; i < missing.size(); ++i) {
        cache->store(ts[missing[i]], fresh[i]);
        abs2[missing[i]] = std::norm(fresh[i]);
    }
    return abs2;
}

// Chunk-ordered compensated mean, identical for any worker count.
double ordered_mean(const std::vector<double>& xs) {
    std::size_t n_chunks = (xs.size() + kChunk - 1) / kChunk;
    std::vector<double> partial(n_chunks, 0.0);
    for_each_range_chunk(xs.size(), kChunk, [&](std::size_t b, std::size_t e, std::size_t c) {
        kahan_sum acc;
        for (std::size_t i = b; i < e; ++i) acc.add(xs[i]);
        partial[c] = acc.value();
    });
    kahan_sum total;
    for (double v : partial) total.add(v);
    return total.value() / (double)xs.size();
}

} // namespace

std::vector<double> mc_sample_points(double T, std::uint64_t n, std::uint64_t seed) {
    std::vector<double> ts(n);
    double width = T / (double)n;
    for (std::uint64_t i = 0; i < n; ++i)
        ts[i] = T + ((double)i + uniform01(seed, i)) * width;
    return ts;
}

MomentEstimate moment_mc(double k, double T, std::uint64_t n, std::uint64_t seed,
                         SampleCache* cache) {
    check_mc_ranges(k, T, n);
    auto ts = mc_sample_points(T, n, seed);
    auto abs2 = sample_abs2(ts, cache);
    std::vector<double> xs(n);
    for (std::uint64_t i = 0; i < n; ++i) xs[i] = integrand(abs2[i], k);

    MomentEstimate est;
    est.k = k;
    est.T = T;
    est.n = n;
    est.seed = seed;
    est.method = MomentMethod::monte_carlo;
    est.value = ordered_mean(xs);
    // jackknife-on-the-mean standard error
    std::vector<double> sq(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        double d = xs[i] - est.value;
        sq[i] = d * d;
    }
    double ss = ordered_mean(sq) * (double)n;
    est.std_error = std::sqrt(ss / ((double)n * ((double)n - 1.0)));
    return est;
}

MomentEstimate moment_quadrature(double k, double T, double step, SampleCache* cache) {
    if (!(k == 1.0 || k == 2.0))
        throw precondition_error("moment_quadrature requires k in {1, 2}");
    if (!(T >= 1e3 && T <= 2e5)) throw precondition_error("moment_quadrature requires 1e3 <= T <= 2e5");
    if (!(step > 0.0 && step <= 0.05))
        throw precondition_error("moment_quadrature requires 0 < step <= 0.05");

    // interval count divisible by 4 so a half-resolution Simpson rule embeds
    std::uint64_t n = 4 * (std::uint64_t)std::ceil(T / (4.0 * step));
    double h = T / (double)n;
    std::vector<double> ts(n + 1);
    for (std::uint64_t i = 0; i <= n; ++i) ts[i] = T + (double)i * h;
    auto abs2 = sample_abs2(ts, cache);

    std::size_t n_chunks = (n + 1 + kChunk - 1) / kChunk;
    std::vector<double> fine(n_chunks, 0.0), coarse(n_chunks, 0.0);
    for_each_range_chunk(n + 1, kChunk, [&](std::size_t b, std::size_t e, std::size_t c) {
        kahan_sum f, g;
        for (std::size_t i = b; i < e; ++i) {
            double x = integrand(abs2[i], k);
            double wf = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            f.add(wf * x);
            if (i % 2 == 0) {
                double wg = (i == 0 || i == n) ? 1.0 : (i % 4 ? 4.0 : 2.0);
                g.add(wg * x);
            }
        }
        fine[c] = f.value();
        coarse[c] = g.value();
    });
    kahan_sum sf, sg;
    for (double v : fine) sf.add(v);
    for (double v : coarse) sg.add(v);
    double fine_int = sf.value() * h / 3.0;
    double coarse_int = sg.value() * (2.0 * h) / 3.0;

    MomentEstimate est;
    est.k = k;
    est.T = T;
    est.n = n + 1;
    est.method = MomentMethod::quadrature;
    est.value = fine_int / T;
    est.std_error = std::abs(fine_int - coarse_int) / 15.0 / T;
    return est;
}

LargeValueMeasure large_value_measure(const LargeValueQuery& q, std::uint64_t n,
                                      std::uint64_t seed, SampleCache* cache) {
    if (!std::isfinite(q.V)) throw precondition_error("large_value_measure: V must be finite");
    check_mc_ranges(0.0, q.T, n);
    auto ts = mc_sample_points(q.T, n, seed);
    auto abs2 = sample_abs2(ts, cache);
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        double a = std::sqrt(abs2[i]);
        double lv = (a < 1e-6) ? -50.0 : std::log(a);
        if (lv >= q.V) ++count;
    }
    LargeValueMeasure m;
    m.count = count;
    m.n = n;
    m.seed = seed;
    m.fraction = (double)count / (double)n;
    m.std_error = std::sqrt(m.fraction * (1.0 - m.fraction) / (double)n);
    return m;
}

} // namespace zb
