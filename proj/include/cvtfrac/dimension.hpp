#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cvtfrac/cell_set.hpp"
#include "cvtfrac/radix.hpp"

namespace cvtfrac {

/// log(n(n+1)/2) / log(n): similarity dimension of the base-n zero-carry
/// fractal, which has n(n+1)/2 copies at scale 1/n.
double similarity_dimension(Base base);

/// 2 - similarity_dimension(n), evaluated as log(2n/(n+1)) / log(n).
double dimension_gap(Base base);

inline constexpr std::uint64_t kDefaultBaseSearchCap = 1'000'000;

struct TargetBase {
    std::uint64_t base = 2;
    double achieved = 0.0;
    /// True when the target lies beyond the dimension reachable within the
    /// search cap; `base` is then the cap itself.
    bool capped = false;
};

/// Base whose similarity dimension is nearest to `target`, ties toward the
/// smaller base. Throws OutOfRange unless log3/log2 <= target < 2.
TargetBase base_for_target_dimension(double target, std::uint64_t cap = kDefaultBaseSearchCap);

/// Number of aligned box_size x box_size boxes holding at least one cell.
/// Throws InvalidScale unless box_size divides the extent.
std::uint64_t box_count(const CellSet& cells, std::uint64_t box_size);

struct DimensionEstimate {
    std::uint64_t extent = 0;
    std::vector<std::uint64_t> scales;  ///< box side lengths, ascending
    std::vector<std::uint64_t> counts;  ///< occupied boxes per scale
    double slope = 0.0;
    double fit_quality = 0.0;
};

/// Box-counting estimate over box sizes base^0 .. base^(depth-1), fitting
/// log(count) against log(extent / box size).
DimensionEstimate estimate_dimension(const CellSet& cells);

/// scale,count,log_scale,log_count rows followed by slope and fit_quality
/// footer lines.
void write_dimension_csv(const DimensionEstimate& estimate, std::ostream& out);
void write_dimension_csv(const DimensionEstimate& estimate, const std::string& path);

}  // namespace cvtfrac
