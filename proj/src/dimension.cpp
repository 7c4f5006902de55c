#include "cvtfrac/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include <fmt/format.h>

#include "write_file.hpp"

#include "cvtfrac/least_squares.hpp"

namespace cvtfrac {

namespace {

double similarity_dimension_raw(std::uint64_t n) {
    const auto x = static_cast<double>(n);
    return std::log(x * (x + 1.0) / 2.0) / std::log(x);
}

}  // namespace

double similarity_dimension(Base base) {
    return similarity_dimension_raw(base.value());
}

double dimension_gap(Base base) {
    const auto n = static_cast<double>(base.value());
    // 2n/(n+1) = 2 * (1 - 1/(n+1))
    return (std::numbers::ln2 + std::log1p(-1.0 / (n + 1.0))) / std::log(n);
}

TargetBase base_for_target_dimension(double target, std::uint64_t cap) {
    const double lower = similarity_dimension_raw(2);
    if (!(target >= lower && target < 2.0)) {
        throw OutOfRange(fmt::format("target dimension {} outside [{:.6f}, 2)", target, lower));
    }
    if (cap < 2) {
        throw ArgumentError("base search cap must be at least 2");
    }
    if (similarity_dimension_raw(cap) < target) {
        return {cap, similarity_dimension_raw(cap), true};
    }

    // Smallest n with S_D(n) >= target; S_D is strictly increasing.
    std::uint64_t lo = 2;
    std::uint64_t hi = cap;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (similarity_dimension_raw(mid) >= target) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    TargetBase best{lo, similarity_dimension_raw(lo), false};
    if (lo > 2) {
        const double below = similarity_dimension_raw(lo - 1);
        if (target - below <= best.achieved - target) {
            best = {lo - 1, below, false};
        }
    }
    return best;
}

std::uint64_t box_count(const CellSet& cells, std::uint64_t box_size) {
    const std::uint64_t extent = cells.extent();
    if (box_size == 0 || extent % box_size != 0) {
        throw InvalidScale(fmt::format("box size {} does not divide extent {}", box_size, extent));
    }
    const std::uint64_t boxes_per_side = extent / box_size;
    std::vector<std::uint64_t> keys;
    keys.reserve(cells.size());
    for (const Cell& c : cells.cells()) {
        keys.push_back((c.row / box_size) * boxes_per_side + c.col / box_size);
    }
    std::sort(keys.begin(), keys.end());
    return static_cast<std::uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

DimensionEstimate estimate_dimension(const CellSet& cells) {
    if (cells.empty()) {
        throw EmptyInput("cannot estimate the dimension of an empty cell set");
    }
    if (cells.depth() < 2) {
        throw InsufficientScales(fmt::format(
            "extent {}^{} offers {} box scale(s); at least 2 are needed",
            cells.base().value(), cells.depth(), cells.depth()));
    }

    DimensionEstimate est;
    est.extent = cells.extent();
    std::vector<double> log_scale;
    std::vector<double> log_count;
    std::uint64_t box = 1;
    for (unsigned j = 0; j < cells.depth(); ++j) {
        const std::uint64_t count = box_count(cells, box);
        est.scales.push_back(box);
        est.counts.push_back(count);
        log_scale.push_back(std::log(static_cast<double>(est.extent / box)));
        log_count.push_back(std::log(static_cast<double>(count)));
        box *= cells.base().value();
    }
    const LinearFit fit = fit_line(log_scale, log_count);
    est.slope = fit.slope;
    est.fit_quality = fit.r_squared;
    return est;
}

void write_dimension_csv(const DimensionEstimate& estimate, std::ostream& out) {
    out << "scale,count,log_scale,log_count\n";
    for (std::size_t i = 0; i < estimate.scales.size(); ++i) {
        const double log_scale = std::log(static_cast<double>(estimate.extent / estimate.scales[i]));
        const double log_count = std::log(static_cast<double>(estimate.counts[i]));
        out << fmt::format("{},{},{:.9f},{:.9f}\n", estimate.scales[i], estimate.counts[i], log_scale,
                           log_count);
    }
    out << fmt::format("slope,{:.9f}\n", estimate.slope);
    out << fmt::format("fit_quality,{:.9f}\n", estimate.fit_quality);
}

void write_dimension_csv(const DimensionEstimate& estimate, const std::string& path) {
    detail::write_file(path, [&](std::ostream& out) { write_dimension_csv(estimate, out); });
}

}  // namespace cvtfrac
