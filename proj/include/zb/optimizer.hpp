#pragma once
// Constrained minimisation of b(c1, c3) = c1 (c1/(4 c3 - 2) + 1) over a grid,
// under the three mutually inconsistent constraint forms the source material
// states. All three are carried; the report records which of them admits the
// reference optimum instead of silently picking one.

#include <cstdint>
#include <vector>

namespace zb {

// b(c1, c3). Requires c1 > 1 and 1/2 < c3 < 1.
double b_value(double c1, double c3);

enum class ConstraintVariant { V1, V2, V3 };

enum class ConstraintStatus { satisfied, violated, vacuous };

struct ConstraintValue {
    double value = 0.0;
    double a = 0.0; // the base c1^{1-c3} (V1, V2) or c1^{1-c4} (V3)
    ConstraintStatus status = ConstraintStatus::violated;
};

// V1: k a^2/(a-1) e^{+c2 k (1-c3)},  a = c1^{1-c3}
// V2: k a^2/(a-1) e^{-c2 k (1-c3)},  a = c1^{1-c3}
// V3: k a^2/(a-1) e^{-a k (1-c4)},   a = c1^{1-c4}
// satisfied <=> 0 < value < 1/4; a < 1 makes a^2/(a-1) negative => vacuous.
// a = 1 throws singularity_error.
ConstraintValue constraint_value(ConstraintVariant v, double c1, double c2, double c3,
                                 double k);

struct WorstK {
    double k = 1.0;        // argmax of k e^{-lambda k} over k >= 1 (clamped)
    double lambda = 0.0;
    bool diverges = false; // lambda <= 0: the value grows without bound in k
};

// k-robustness of a variant at fixed (c1, c2, c3).
WorstK worst_k(ConstraintVariant v, double c1, double c2, double c3);

struct GridSpec {
    double c1_min = 1.0; // open end unless the range is degenerate
    double c1_max = 20.0;
    double c3_min = 0.5; // open
    double c3_max = 1.0; // open
    double step = 0.01;
};

struct SideConditions {
    bool log_c1_lt_half_c1 = false;
    bool c2_over_b_gt_2 = false;
    bool c1_lt_100 = false;
    bool cap_gap_statement = false; // cap - j <= (1/beta_j)/log c1, all j, L = 1e8
    bool cap_gap_proof = false;     // cap - j <= log(1/beta_j)/log c1, all j
    bool all() const {
        return log_c1_lt_half_c1 && c2_over_b_gt_2 && c1_lt_100 && cap_gap_statement &&
               cap_gap_proof;
    }
};

struct VariantResult {
    ConstraintVariant variant;
    bool feasible = false;
    double best_b = 0.0, best_c1 = 0.0, best_c3 = 0.0, best_c2 = 0.0;
    ConstraintValue at_best;
    SideConditions side_at_best;
    WorstK worst_at_best;
    ConstraintValue at_reference; // at (1.38, 18.63, 0.56), k = 1
    std::uint64_t n_feasible = 0;
    std::uint64_t n_evaluated = 0;
};

struct OptimizationReport {
    GridSpec grid;
    std::vector<double> k_set;
    double c2_margin = 1e-6; // c2 = 2 b (1 + margin) during the search
    double reference_b = 0.0, reference_c2 = 0.0; // b(1.38, 0.56) and 2b
    bool reference_on_grid = false;
    bool monotonicity_ok = false; // b increasing in c1, decreasing in c3 (sampled)
    std::vector<VariantResult> variants;
};

// Exhaustive scan plus two refinement rounds (step/10, step/100) around each
// variant's feasible argmin. Deterministic; argmin ties break to the smallest
// c1, then smallest c3. An empty feasible set is reported, not an error.
OptimizationReport grid_search(const std::vector<ConstraintVariant>& variants,
                               const GridSpec& grid = {},
                               const std::vector<double>& k_set = {1.0});

} // namespace zb
