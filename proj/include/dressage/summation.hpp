#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace dressage {

/// Neumaier-compensated accumulator. Field sums, dot products and phase
/// exponents all run through this so the 1e-12 .. 1e-10 contracts stay
/// honest at 32^3.
class Kahan {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
    Kahan acc;
    for (double x : xs)
        acc.add(x);
    return acc.value();
}

inline double compensated_dot(std::span<const double> a, std::span<const double> b) {
    Kahan acc;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc.add(a[i] * b[i]);
    return acc.value();
}

} // namespace dressage
