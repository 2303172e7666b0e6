#pragma once
// Nonnegative reals carried by their natural logarithm. In the asymptotic
// regime loglog T >= 1e8, quantities like (log T)^{k^2} have logs near 1e16;
// the values themselves do not exist in double. Products become sums of
// logs, sums go through log-sum-exp, comparisons compare logs.

#include <cmath>
#include <limits>
#include <vector>

#include "zb/kahan.hpp"

namespace zb {

class LogScalar {
  public:
    LogScalar() : log_(-std::numeric_limits<double>::infinity()), zero_(true) {}

    static LogScalar from_log(double lv) {
        LogScalar s;
        s.log_ = lv;
        s.zero_ = false;
        return s;
    }
    static LogScalar from_value(double v) {
        if (v == 0.0) return LogScalar();
        return from_log(std::log(v));
    }
    static LogScalar zero() { return LogScalar(); }

    bool is_zero() const { return zero_; }
    // log of the value; -inf for zero
    double log() const { return log_; }
    // the value itself; overflows to +inf when log > ~709
    double value() const { return zero_ ? 0.0 : std::exp(log_); }

    friend LogScalar operator*(const LogScalar& a, const LogScalar& b) {
        if (a.zero_ || b.zero_) return LogScalar();
        return from_log(a.log_ + b.log_);
    }
    friend LogScalar operator+(const LogScalar& a, const LogScalar& b) {
        if (a.zero_) return b;
        if (b.zero_) return a;
        double hi = a.log_ > b.log_ ? a.log_ : b.log_;
        double lo = a.log_ > b.log_ ? b.log_ : a.log_;
        return from_log(hi + std::log1p(std::exp(lo - hi)));
    }
    friend bool operator<(const LogScalar& a, const LogScalar& b) {
        if (a.zero_) return !b.zero_;
        if (b.zero_) return false;
        return a.log_ < b.log_;
    }
    friend bool operator<=(const LogScalar& a, const LogScalar& b) { return !(b < a); }

  private:
    double log_;
    bool zero_;
};

// log(sum of exp(x)) over a list of log-domain terms; empty list is log(0).
inline LogScalar log_sum_exp(const std::vector<double>& logs) {
    if (logs.empty()) return LogScalar::zero();
    double hi = -std::numeric_limits<double>::infinity();
    for (double x : logs)
        if (x > hi) hi = x;
    if (std::isinf(hi)) return LogScalar::zero();
    kahan_sum acc;
    for (double x : logs) acc.add(std::exp(x - hi));
    return LogScalar::from_log(hi + std::log(acc.value()));
}

} // namespace zb
