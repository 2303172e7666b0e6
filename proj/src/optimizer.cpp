#include "zb/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zb/asymptotic.hpp"
#include "zb/errors.hpp"
#include "zb/parallel.hpp"
#include "zb/partition.hpp"

namespace zb {
namespace {

constexpr double kSideConditionL = 1e8;

void check_domain(double c1, double c3) {
    if (!(c1 > 1.0)) throw precondition_error("b_value requires c1 > 1");
    if (!(c3 > 0.5 && c3 < 1.0)) throw precondition_error("b_value requires 1/2 < c3 < 1");
}

SideConditions side_conditions(double c1, double c2, double c3, double k) {
    SideConditions s;
    s.log_c1_lt_half_c1 = std::log(c1) < c1 / 2.0;
    s.c2_over_b_gt_2 = c2 / b_value(c1, c3) > 2.0;
    s.c1_lt_100 = c1 < 100.0;
    HarperParams hp{c1, c2, c3};
    auto cg = cap_gap_checks(hp, k, kSideConditionL);
    s.cap_gap_statement = cg.statement_ok;
    s.cap_gap_proof = cg.proof_ok;
    return s;
}

// Grid axes. A degenerate range (min == max) evaluates that single point;
// otherwise c1 covers (min, max] and c3 covers (min, max), both open at the
// left per the search domain.
std::vector<double> axis(double lo, double hi, double step, bool include_hi) {
    std::vector<double> xs;
    if (lo == hi) {
        xs.push_back(lo);
        return xs;
    }
    long n = (long)std::floor((hi - lo) / step + 1e-9);
    for (long i = 1; i <= n; ++i) {
        double x = lo + (double)i * step;
        if (x > hi + 1e-12) break;
        if (!include_hi && x >= hi - 1e-12) break;
        xs.push_back(x);
    }
    return xs;
}

struct Candidate {
    bool ok = false;
    double b = 0.0, c1 = 0.0, c3 = 0.0;
};

bool better(const Candidate& a, const Candidate& b) {
    if (!a.ok) return false;
    if (!b.ok) return true;
    if (a.b != b.b) return a.b < b.b;
    if (a.c1 != b.c1) return a.c1 < b.c1;
    return a.c3 < b.c3;
}

bool feasible_at(ConstraintVariant v, double c1, double c3, double margin,
                 const std::vector<double>& k_set, double* b_out) {
    double b = b_value(c1, c3);
    double c2 = 2.0 * b * (1.0 + margin);
    *b_out = b;
    for (double k : k_set) {
        ConstraintValue cv;
        try {
            cv = constraint_value(v, c1, c2, c3, k);
        } catch (const singularity_error&) {
            return false;
        }
        if (cv.status != ConstraintStatus::satisfied) return false;
        if (!side_conditions(c1, c2, c3, k).all()) return false;
    }
    return true;
}

Candidate scan(ConstraintVariant v, const std::vector<double>& c1s,
               const std::vector<double>& c3s, double margin,
               const std::vector<double>& k_set, std::uint64_t* n_feasible,
               std::uint64_t* n_evaluated) {
    std::vector<Candidate> row_best(c1s.size());
    std::vector<std::uint64_t> row_feas(c1s.size(), 0);
    for_each_chunk(c1s.size(), [&](std::size_t i) {
        Candidate best;
        for (double c3 : c3s) {
            double b;
            if (feasible_at(v, c1s[i], c3, margin, k_set, &b)) {
                ++row_feas[i];
                Candidate cand{true, b, c1s[i], c3};
                if (better(cand, best)) best = cand;
            }
        }
        row_best[i] = best;
    });
    Candidate best;
    for (std::size_t i = 0; i < c1s.size(); ++i) {
        if (better(row_best[i], best)) best = row_best[i];
        if (n_feasible) *n_feasible += row_feas[i];
    }
    if (n_evaluated) *n_evaluated += (std::uint64_t)c1s.size() * c3s.size();
    return best;
}

} // namespace

double b_value(double c1, double c3) {
    check_domain(c1, c3);
    return c1 * (c1 / (4.0 * c3 - 2.0) + 1.0);
}

ConstraintValue constraint_value(ConstraintVariant v, double c1, double c2, double c3,
                                 double k) {
    check_domain(c1, c3);
    if (!(c2 > 0.0)) throw precondition_error("constraint_value requires c2 > 0");
    if (!(k >= 1.0)) throw precondition_error("constraint_value requires k >= 1");
    double c4 = c1 / (4.0 * c3 - 2.0) + 1.0;
    double a, expo;
    switch (v) {
        case ConstraintVariant::V1:
            a = std::pow(c1, 1.0 - c3);
            expo = +c2 * k * (1.0 - c3);
            break;
        case ConstraintVariant::V2:
            a = std::pow(c1, 1.0 - c3);
            expo = -c2 * k * (1.0 - c3);
            break;
        case ConstraintVariant::V3:
            a = std::pow(c1, 1.0 - c4);
            expo = -a * k * (1.0 - c4);
            break;
        default:
            throw precondition_error("constraint_value: unknown variant");
    }
    if (a == 1.0) throw singularity_error("constraint_value: a = 1");
    ConstraintValue out;
    out.a = a;
    out.value = k * a * a / (a - 1.0) * std::exp(expo);
    if (a < 1.0)
        out.status = ConstraintStatus::vacuous;
    else if (out.value > 0.0 && out.value < 0.25)
        out.status = ConstraintStatus::satisfied;
    else
        out.status = ConstraintStatus::violated;
    return out;
}

WorstK worst_k(ConstraintVariant v, double c1, double c2, double c3) {
    check_domain(c1, c3);
    double c4 = c1 / (4.0 * c3 - 2.0) + 1.0;
    WorstK out;
    switch (v) {
        case ConstraintVariant::V1: out.lambda = -c2 * (1.0 - c3); break;
        case ConstraintVariant::V2: out.lambda = +c2 * (1.0 - c3); break;
        case ConstraintVariant::V3: out.lambda = std::pow(c1, 1.0 - c4) * (1.0 - c4); break;
        default: throw precondition_error("worst_k: unknown variant");
    }
    if (out.lambda <= 0.0) {
        out.diverges = true;
        return out;
    }
    out.k = std::max(1.0, 1.0 / out.lambda); // k e^{-lambda k} peaks at 1/lambda
    return out;
}

OptimizationReport grid_search(const std::vector<ConstraintVariant>& variants,
                               const GridSpec& grid, const std::vector<double>& k_set) {
    if (!(grid.step > 0.0)) throw precondition_error("grid_search requires step > 0");
    if (k_set.empty()) throw precondition_error("grid_search requires a nonempty k set");
    OptimizationReport rep;
    rep.grid = grid;
    rep.k_set = k_set;
    rep.reference_b = b_value(1.38, 0.56);
    rep.reference_c2 = 2.0 * rep.reference_b;

    auto c1s = axis(grid.c1_min, grid.c1_max, grid.step, true);
    auto c3s = axis(grid.c3_min, grid.c3_max, grid.step, false);
    rep.reference_on_grid = false;
    for (double x : c1s)
        if (std::abs(x - 1.38) < 1e-9)
            for (double y : c3s)
                if (std::abs(y - 0.56) < 1e-9) rep.reference_on_grid = true;

    // derivative-sign diagnostic: any interior constrained minimum must come
    // from an active constraint, since b itself is monotone in each variable
    rep.monotonicity_ok = true;
    for (double c1 = 1.1; c1 < 19.9; c1 += 1.7) {
        for (double c3 = 0.52; c3 < 0.98; c3 += 0.07) {
            double b0 = b_value(c1, c3);
            if (!(b_value(c1 + 1e-4, c3) > b0) || !(b_value(c1, c3 + 1e-4) < b0))
                rep.monotonicity_ok = false;
        }
    }

    for (auto v : variants) {
        VariantResult vr;
        vr.variant = v;
        vr.at_reference = constraint_value(v, 1.38, 18.63, 0.56, k_set.front());
        Candidate best = scan(v, c1s, c3s, rep.c2_margin, k_set, &vr.n_feasible,
                              &vr.n_evaluated);
        // two local refinement rounds around the argmin
        double step = grid.step;
        for (int round = 0; round < 2 && best.ok; ++round) {
            double fine = step / 10.0;
            double lo1 = std::max(grid.c1_min, best.c1 - step);
            double hi1 = std::min(grid.c1_max, best.c1 + step);
            double lo3 = std::max(grid.c3_min, best.c3 - step);
            double hi3 = std::min(grid.c3_max, best.c3 + step);
            auto f1 = axis(lo1, hi1, fine, true);
            auto f3 = axis(lo3, hi3, fine, false);
            Candidate refined = scan(v, f1, f3, rep.c2_margin, k_set, nullptr,
                                     &vr.n_evaluated);
            if (better(refined, best)) best = refined;
            step = fine;
        }
        vr.feasible = best.ok;
        if (best.ok) {
            vr.best_b = best.b;
            vr.best_c1 = best.c1;
            vr.best_c3 = best.c3;
            vr.best_c2 = 2.0 * best.b * (1.0 + rep.c2_margin);
            vr.at_best = constraint_value(v, best.c1, vr.best_c2, best.c3, k_set.front());
            vr.side_at_best = side_conditions(best.c1, vr.best_c2, best.c3, k_set.front());
            vr.worst_at_best = worst_k(v, best.c1, vr.best_c2, best.c3);
        }
        rep.variants.push_back(vr);
    }
    return rep;
}

} // namespace zb
