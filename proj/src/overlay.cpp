#include "cvtfrac/overlay.hpp"

#include <cmath>
#include <ostream>
#include <vector>

#include <fmt/format.h>

#include "cvtfrac/cv_table.hpp"
#include "write_file.hpp"

namespace cvtfrac {

CellSet overflow_generator(Base small, Base large) {
    if (large.value() != small.value() + 1ULL) {
        throw InvalidPair(fmt::format("bases {} and {} are not consecutive", small.value(), large.value()));
    }
    const CellSet big = zero_carry_generator(large);
    const CellSet little = zero_carry_generator(small);
    std::vector<Cell> overflow;
    for (const Cell& c : big.cells()) {
        // `little` lives in the top-left small x small block, so its
        // coordinates can be compared directly.
        if (!little.contains(c)) {
            overflow.push_back(c);
        }
    }
    return CellSet(large, 1, std::move(overflow));
}

CellSet iterate_overflow_fractal(const CellSet& generator, unsigned depth, std::uint64_t max_extent) {
    if (depth == 0) {
        throw ArgumentError("overflow fractal depth must be at least 1");
    }
    return substitute(generator, depth, max_extent);
}

OverlayReport analyze_overlay(Base small, unsigned depth) {
    const Base large(static_cast<long long>(small.value()) + 1);
    CellSet generator = overflow_generator(small, large);
    const CellSet fractal = iterate_overflow_fractal(generator, depth);
    DimensionEstimate measured = estimate_dimension(fractal);

    const double expected = std::log(static_cast<double>(generator.size())) /
                            std::log(static_cast<double>(generator.extent()));
    return OverlayReport{small.value(), large.value(), depth, std::move(generator), expected,
                         kClaimedIncrement, std::move(measured)};
}

void write_overlay_text(const OverlayReport& report, std::ostream& out) {
    out << fmt::format("overlay: base {} generator over base {} generator\n", report.small_base,
                       report.large_base);
    out << fmt::format("overflow cells ({}):", report.overflow_cells.size());
    for (const Cell& c : report.overflow_cells.cells()) {
        out << fmt::format(" ({},{})", c.row, c.col);
    }
    out << '\n';
    out << fmt::format("iteration depth: {} (extent {})\n", report.depth, report.measured.extent);
    out << fmt::format("measured box-counting slope: {:.6f} (fit quality {:.6f})\n", report.measured.slope,
                       report.measured.fit_quality);
    out << fmt::format("substitution dimension log {} / log {}: {:.6f}\n", report.overflow_cells.size(),
                       report.overflow_cells.extent(), report.expected_slope);
    out << fmt::format("claimed increment (log 3 / log 2): {:.6f}\n", report.claimed_increment);
    out << fmt::format("measured minus claimed: {:+.6f}\n", report.measured.slope - report.claimed_increment);
}

void write_overlay_text(const OverlayReport& report, const std::string& path) {
    detail::write_file(path, [&](std::ostream& out) { write_overlay_text(report, out); });
}

void write_overlay_csv(const OverlayReport& report, std::ostream& out) {
    out << "scale,count\n";
    for (std::size_t i = 0; i < report.measured.scales.size(); ++i) {
        out << report.measured.scales[i] << ',' << report.measured.counts[i] << '\n';
    }
}

void write_overlay_csv(const OverlayReport& report, const std::string& path) {
    detail::write_file(path, [&](std::ostream& out) { write_overlay_csv(report, out); });
}

}  // namespace cvtfrac
