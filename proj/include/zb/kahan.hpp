#pragma once
// Compensated (Kahan-Neumaier) accumulation for long reciprocal sums.

#include <cmath>

namespace zb {

struct kahan_sum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

} // namespace zb
