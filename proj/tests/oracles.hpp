#ifndef SPLINEQUAD_TESTS_ORACLES_HPP
#define SPLINEQUAD_TESTS_ORACLES_HPP

// Test-only reference computations, kept independent of the library code paths they check.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_bin_float_50;

/// Gauss-Legendre nodes/weights on [-1, 1] by Newton on the Legendre recurrence.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int count)
{
    std::vector<double> nodes(count), weights(count);
    for (int i = 0; i < count; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= count; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = count * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
                break;
            }
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        nodes[i] = x;
    }
    return {nodes, weights};
}

/// C_n^(alpha)(x) from the explicit sum
///   sum_k (-1)^k Gamma(n - k + alpha) / (Gamma(alpha) k! (n - 2k)!) (2x)^(n - 2k),
/// evaluated in 50-digit arithmetic. alpha = twice_alpha / 2.
inline Big gegenbauer_explicit(int twice_alpha, int n, const Big& x)
{
    if (n < 0) return Big(0);
    const Big alpha = Big(twice_alpha) / 2;
    Big sum = 0;
    for (int k = 0; 2 * k <= n; ++k) {
        // Gamma(n - k + alpha) / Gamma(alpha) = alpha (alpha + 1) ... (alpha + n - k - 1)
        Big rising = 1;
        for (int j = 0; j < n - k; ++j) rising *= alpha + j;
        Big denom = 1;
        for (int j = 2; j <= k; ++j) denom *= j;
        for (int j = 2; j <= n - 2 * k; ++j) denom *= j;
        Big term = rising / denom * pow(2 * x, n - 2 * k);
        sum += (k % 2 == 0) ? term : Big(-term);
    }
    return sum;
}

inline std::uint64_t binomial(int n, int k)
{
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / i;
    return result;
}

} // namespace oracle

#endif // SPLINEQUAD_TESTS_ORACLES_HPP
