#include "zb/partition.hpp"

#include <cmath>
#include <string>

#include "zb/dirichlet.hpp"
#include "zb/errors.hpp"
#include "zb/parallel.hpp"
#include "zb/rng.hpp"

namespace zb {

void HarperParams::validate() const {
    if (!(c1 > 1.0)) throw precondition_error("HarperParams: c1 > 1 required");
    if (!(c1 < 100.0)) throw precondition_error("HarperParams: c1 < 100 required");
    if (!(c3 > 0.5 && c3 < 1.0)) throw precondition_error("HarperParams: 1/2 < c3 < 1 required");
    if (!(c4() > 1.0)) throw precondition_error("HarperParams: c4 > 1 required");
}

double beta(int i, const HarperParams& p, double L) {
    if (i < 0) throw precondition_error("beta: i >= 0 required");
    if (i == 0) return 0.0;
    return std::pow(p.c1, i - 1) / (L * L);
}

double beta_log(int i, const HarperParams& p, double L) {
    if (i < 1) throw precondition_error("beta_log: i >= 1 required");
    return (i - 1) * std::log(p.c1) - 2.0 * std::log(L);
}

int cap_index(const HarperParams& p, double k, double L) {
    p.validate();
    if (!(L >= 3.0)) throw precondition_error("cap_index: L >= 3 required");
    const double target = -p.c2 * k; // log of e^{-c2 k}
    const double lnc1 = std::log(p.c1);
    const double lnL2 = 2.0 * std::log(L);
    // largest i >= 1 with (i-1) ln c1 - 2 ln L <= -c2 k, or 0 if none
    long i = (long)std::floor((lnL2 + target) / lnc1) + 1;
    if (i < 0) i = 0;
    while ((double)i * lnc1 - lnL2 <= target) ++i; // i+1 still qualifies
    while (i >= 1 && (double)(i - 1) * lnc1 - lnL2 > target) --i;
    return (int)(1 + i);
}

BetaSequence BetaSequence::asymptotic(const HarperParams& p, double k, double L) {
    BetaSequence s;
    s.params = p;
    s.k = k;
    s.L = L;
    int J = cap_index(p, k, L);
    s.betas.reserve(J);
    for (int i = 1; i <= J; ++i) s.betas.push_back(beta(i, p, L));
    return s;
}

BetaSequence BetaSequence::toy(const HarperParams& p, std::vector<double> betas) {
    if (betas.empty()) throw precondition_error("BetaSequence::toy: need at least one beta");
    double last = 0.0;
    for (double b : betas) {
        if (!(b > last)) throw precondition_error("BetaSequence::toy: betas must be positive increasing");
        last = b;
    }
    BetaSequence s;
    s.params = p;
    s.betas = std::move(betas);
    return s;
}

PartitionLabel classify(double t, const BetaSequence& seq, double T, double capacity) {
    const int J = seq.cap();
    const double c3 = seq.params.c3;
    for (int j = 0; j <= J - 1; ++j) {
        // level i = j+1 against every smoothing index l in [j+1, J]
        const double beta_level = seq.betas[j];
        const double beta_below = (j == 0) ? 0.0 : seq.betas[j - 1];
        const double threshold = std::pow(beta_level, -c3);
        for (int l = j + 1; l <= J; ++l) {
            SmoothedPolyConfig cfg{T, beta_below, beta_level, seq.betas[l - 1]};
            double re = g_sum(cfg, t, capacity).real();
            if (std::abs(re) > threshold) return PartitionLabel{false, j};
        }
    }
    return PartitionLabel{true, -1};
}

MeasureReport estimate_measures(const BetaSequence& seq, double T,
                                std::uint64_t n_samples, std::uint64_t seed,
                                double capacity) {
    if (n_samples == 0) throw precondition_error("estimate_measures: n_samples >= 1 required");
    const int J = seq.cap();
    // label index 0 = tcal, 1+j = S(j)
    const std::size_t n_labels = 1 + (std::size_t)J;
    const std::size_t chunk = 512;
    const std::size_t n_chunks = (n_samples + chunk - 1) / chunk;
    std::vector<std::vector<std::uint64_t>> counts(n_chunks,
                                                   std::vector<std::uint64_t>(n_labels, 0));
    for_each_chunk(n_chunks, [&](std::size_t c) {
        std::uint64_t b = c * chunk;
        std::uint64_t e = std::min<std::uint64_t>(b + chunk, n_samples);
        for (std::uint64_t i = b; i < e; ++i) {
            double u = uniform01(seed, i);
            double t = T + ((double)i + u) * (T / (double)n_samples);
            PartitionLabel lb = classify(t, seq, T, capacity);
            counts[c][lb.tcal ? 0 : 1 + lb.j]++;
        }
    });
    std::vector<std::uint64_t> total(n_labels, 0);
    for (const auto& part : counts)
        for (std::size_t i = 0; i < n_labels; ++i) total[i] += part[i];

    MeasureReport rep;
    rep.n_samples = n_samples;
    rep.seed = seed;
    for (std::size_t i = 0; i < n_labels; ++i) {
        LabelFraction lf;
        lf.label = i == 0 ? PartitionLabel{true, -1} : PartitionLabel{false, (int)i - 1};
        lf.count = total[i];
        lf.fraction = (double)total[i] / (double)n_samples;
        lf.std_error = std::sqrt(lf.fraction * (1.0 - lf.fraction) / (double)n_samples);
        rep.fractions.push_back(lf);
    }
    return rep;
}

} // namespace zb
