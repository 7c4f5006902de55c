#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cvtfrac/cell_set.hpp"
#include "cvtfrac/dimension.hpp"

namespace cvtfrac {

/// Increment dimension asserted for every overlay pair in the source
/// literature: log 3 / log 2.
inline constexpr double kClaimedIncrement = 1.584962500721156;

/// Cells of the base-`large` generator left uncovered when the base-`small`
/// generator is embedded at its top-left corner. Throws InvalidPair unless
/// large == small + 1.
CellSet overflow_generator(Base small, Base large);

/// Substitution fractal of `generator` (a depth-1 set) to `depth` levels.
CellSet iterate_overflow_fractal(const CellSet& generator, unsigned depth,
                                 std::uint64_t max_extent = kMaxSparseExtent);

struct OverlayReport {
    std::uint64_t small_base = 0;
    std::uint64_t large_base = 0;
    unsigned depth = 0;
    CellSet overflow_cells;
    /// log|generator| / log(extent): what a substitution fractal must measure.
    double expected_slope = 0.0;
    double claimed_increment = kClaimedIncrement;
    DimensionEstimate measured;
};

/// Builds the (small, small+1) overflow generator, iterates it to `depth`
/// and box-counts the result. The claimed increment is carried alongside
/// the measurement, never substituted for it.
OverlayReport analyze_overlay(Base small, unsigned depth);

void write_overlay_text(const OverlayReport& report, std::ostream& out);
void write_overlay_text(const OverlayReport& report, const std::string& path);

/// scale,count rows of the measured box counts.
void write_overlay_csv(const OverlayReport& report, std::ostream& out);
void write_overlay_csv(const OverlayReport& report, const std::string& path);

}  // namespace cvtfrac
