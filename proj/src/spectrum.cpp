#include "cvtfrac/spectrum.hpp"

#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>

#include <fftw3.h>
#include <fmt/format.h>

#include "cvtfrac/error.hpp"
#include "cvtfrac/least_squares.hpp"

namespace cvtfrac {

namespace {

// FFTW planning touches global state.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwFree {
    void operator()(void* p) const noexcept { fftw_free(p); }
};

struct PlanDestroy {
    void operator()(fftw_plan p) const noexcept {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(p);
    }
};

}  // namespace

std::vector<double> periodogram(std::span<const double> series) {
    const std::size_t n = series.size();
    if (n < 2) {
        throw InsufficientData("periodogram needs at least two samples");
    }
    const double mean = std::accumulate(series.begin(), series.end(), 0.0) / static_cast<double>(n);

    std::unique_ptr<double, FftwFree> in(static_cast<double*>(fftw_malloc(sizeof(double) * n)));
    std::unique_ptr<fftw_complex, FftwFree> out(
        static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (n / 2 + 1))));
    if (!in || !out) {
        throw std::bad_alloc();
    }
    std::unique_ptr<std::remove_pointer_t<fftw_plan>, PlanDestroy> plan;
    {
        std::lock_guard lock(planner_mutex());
        plan.reset(fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(), FFTW_ESTIMATE));
    }
    for (std::size_t i = 0; i < n; ++i) {
        in.get()[i] = series[i] - mean;
    }
    fftw_execute(plan.get());

    std::vector<double> power(n / 2);
    for (std::size_t j = 1; j <= n / 2; ++j) {
        const double re = out.get()[j][0];
        const double im = out.get()[j][1];
        power[j - 1] = (re * re + im * im) / static_cast<double>(n);
    }
    return power;
}

SpectralReport spectral_exponent(std::span<const double> series) {
    const std::size_t n = series.size();
    if (n < kMinSpectrumLength) {
        throw InsufficientData(fmt::format("spectral fit needs at least {} samples, got {}", kMinSpectrumLength, n));
    }
    const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
    if (*lo == *hi) {
        throw DegenerateSeries("series has zero variance");
    }

    const std::vector<double> power = periodogram(series);
    // Relative floor: bins at rounding-noise level carry no spectral shape.
    const double peak = *std::max_element(power.begin(), power.end());
    std::vector<double> log_f;
    std::vector<double> log_p;
    for (std::size_t j = 1; j <= power.size(); ++j) {
        const double p = power[j - 1];
        if (p > peak * 1e-24) {
            log_f.push_back(std::log(static_cast<double>(j) / static_cast<double>(n)));
            log_p.push_back(std::log(p));
        }
    }
    if (log_f.size() < kMinSpectrumBins) {
        throw InsufficientData(
            fmt::format("only {} usable frequency bins; at least {} needed", log_f.size(), kMinSpectrumBins));
    }
    const LinearFit fit = fit_line(log_f, log_p);
    return SpectralReport{n, -fit.slope, fit.r_squared, log_f.size()};
}

std::vector<double> white_noise(std::size_t length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> out(length);
    for (double& x : out) {
        x = dist(rng);
    }
    return out;
}

std::vector<double> cumulative_sum(std::span<const double> series) {
    std::vector<double> out(series.size());
    std::partial_sum(series.begin(), series.end(), out.begin());
    return out;
}

}  // namespace cvtfrac
