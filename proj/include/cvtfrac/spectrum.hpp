#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cvtfrac {

inline constexpr std::size_t kMinSpectrumLength = 32;
inline constexpr std::size_t kMinSpectrumBins = 8;

struct SpectralReport {
    std::size_t series_length = 0;
    double beta = 0.0;  ///< S(f) ~ 1/f^beta
    double fit_quality = 0.0;
    std::size_t frequencies_used = 0;
};

/// |DFT|^2 / L of the mean-removed series at frequencies j/L for
/// j = 1 .. floor(L/2); element j-1 holds bin j.
std::vector<double> periodogram(std::span<const double> series);

/// Fits log P(f) against log f over every nonzero periodogram bin above DC;
/// beta is minus the slope. Throws InsufficientData below 32 samples or 8
/// usable bins and DegenerateSeries for a constant series.
SpectralReport spectral_exponent(std::span<const double> series);

/// Seeded uniform noise on [-1, 1).
std::vector<double> white_noise(std::size_t length, std::uint64_t seed);

/// Running sum of `series`.
std::vector<double> cumulative_sum(std::span<const double> series);

}  // namespace cvtfrac
