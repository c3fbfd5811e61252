#include "vaoi/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace vaoi {

MeanSe mean_se(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n < 2) throw std::invalid_argument("mean_se needs at least two values");
    KahanSum total;
    for (double x : xs) total.add(x);
    const double mean = total.value() / static_cast<double>(n);
    KahanSum sq;
    for (double x : xs) sq.add((x - mean) * (x - mean));
    const double var = sq.value() / static_cast<double>(n - 1);
    return {mean, std::sqrt(var / static_cast<double>(n))};
}

}  // namespace vaoi
