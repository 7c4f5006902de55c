#pragma once

// Independent reference computations used only by the tests.

#include <complex>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

/// Digit criterion for the zero-carry set: every digit pair sums below n.
inline bool no_digit_carries(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    for (; a != 0 || b != 0; a /= n, b /= n) {
        if (a % n + b % n >= n) {
            return false;
        }
    }
    return true;
}

/// Maximal horizontal runs in a row-major membership grid.
inline std::size_t count_runs(const std::vector<std::vector<bool>>& grid) {
    std::size_t runs = 0;
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] && (c == 0 || !row[c - 1])) {
                ++runs;
            }
        }
    }
    return runs;
}

/// Periodogram by direct summation over the mean-removed series.
inline std::vector<double> naive_periodogram(const std::vector<double>& x) {
    const std::size_t n = x.size();
    double mean = 0.0;
    for (double v : x) {
        mean += v;
    }
    mean /= static_cast<double>(n);
    std::vector<double> out;
    for (std::size_t j = 1; j <= n / 2; ++j) {
        std::complex<double> acc{};
        for (std::size_t t = 0; t < n; ++t) {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>(j * t % n) / static_cast<double>(n);
            acc += (x[t] - mean) * std::polar(1.0, angle);
        }
        out.push_back(std::norm(acc) / static_cast<double>(n));
    }
    return out;
}

}  // namespace oracle
