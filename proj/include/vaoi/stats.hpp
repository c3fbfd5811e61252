#pragma once

#include <cstddef>
#include <span>

namespace vaoi {

/// Compensated (Kahan) accumulator; keeps long sums of small per-slot terms
/// accurate over 1e5+ additions.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }

    double value() const { return sum; }
};

/// Sample mean together with its standard error.
struct MeanSe {
    double mean = 0.0;
    double se = 0.0;
};

/// Mean and standard error (sample std over sqrt(n)) of a batch of values.
/// Requires at least two values; throws std::invalid_argument otherwise.
MeanSe mean_se(std::span<const double> xs);

}  // namespace vaoi
