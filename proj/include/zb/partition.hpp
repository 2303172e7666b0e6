#pragma once
// The beta exponent scale, its cap index, and the classifier that assigns
// each sample ordinate to the all-sums-small set or to a first-failure set.

#include <cstdint>
#include <vector>

#include "zb/primes.hpp"

namespace zb {

struct HarperParams {
    double c1 = 1.38;
    double c2 = 18.63;
    double c3 = 0.56;

    double c4() const { return c1 / (4.0 * c3 - 2.0) + 1.0; }
    double b() const { return c1 * c4(); }
    // Throws precondition_error unless 1 < c1 < 100 and 1/2 < c3 < 1.
    void validate() const;
};

// beta_0 = 0, beta_i = c1^{i-1} / L^2 for i >= 1, with L = loglog T.
double beta(int i, const HarperParams& p, double L);
// log(beta_i) for i >= 1, safe deep into the asymptotic regime.
double beta_log(int i, const HarperParams& p, double L);

// Cap index: 1 + max{ i >= 0 : beta_i <= e^{-c2 k} }. Always >= 1 since
// beta_0 = 0. Requires L >= 3.
int cap_index(const HarperParams& p, double k, double L);

// Either the all-small set (tcal) or S(j), 0 <= j <= cap-1.
struct PartitionLabel {
    bool tcal = true;
    int j = -1;
};

// Explicit exponent list beta_1..beta_J plus the threshold parameters.
// Toy sequences keep T^{beta_i} inside the sieve while exercising the
// full predicate logic; the asymptotic factory fills betas from the formula.
struct BetaSequence {
    HarperParams params;
    double k = 1.0;
    double L = 0.0;            // 0 for toy lists
    std::vector<double> betas; // beta_1 .. beta_J, increasing

    int cap() const { return (int)betas.size(); }
    static BetaSequence asymptotic(const HarperParams& p, double k, double L);
    static BetaSequence toy(const HarperParams& p, std::vector<double> betas);
};

// Assigns t to S(j) for the smallest j whose level-(j+1) sums exceed the
// threshold beta_{j+1}^{-c3} for some smoothing index l in [j+1, cap], all
// lower levels being within threshold; tcal if no level fails.
PartitionLabel classify(double t, const BetaSequence& seq, double T,
                        double capacity = kDefaultSieveCapacity);

struct LabelFraction {
    PartitionLabel label;
    std::uint64_t count = 0;
    double fraction = 0.0;
    double std_error = 0.0; // binomial
};

struct MeasureReport {
    std::vector<LabelFraction> fractions; // tcal first, then S(0)..S(J-1)
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
};

// Stratified sample of [T, 2T]; per-label fractions sum to 1 exactly.
// Deterministic per seed for any worker count.
MeasureReport estimate_measures(const BetaSequence& seq, double T,
                                std::uint64_t n_samples, std::uint64_t seed,
                                double capacity = kDefaultSieveCapacity);

} // namespace zb
