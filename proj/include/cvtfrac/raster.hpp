#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cvtfrac/cell_set.hpp"
#include "cvtfrac/cv_table.hpp"

namespace cvtfrac {

inline constexpr std::uint64_t kMaxImageSide = std::uint64_t{1} << 14;

enum class PixelMode { bilevel, gray };

/// Row-major image; row 0 is the top. Bilevel pixels are 0 or 1, gray
/// pixels 0..255.
struct RasterImage {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    PixelMode mode = PixelMode::bilevel;
    std::vector<std::uint8_t> pixels;

    [[nodiscard]] std::uint8_t at(std::uint32_t row, std::uint32_t col) const {
        return pixels.at(static_cast<std::size_t>(row) * width + col);
    }

    friend bool operator==(const RasterImage&, const RasterImage&) = default;
};

/// Cell (r, c) fills the zoom x zoom block at rows [r*zoom, (r+1)*zoom).
RasterImage render_cellset(const CellSet& cells, std::uint32_t zoom = 1);

/// Intensity 255 * value / max_value, rounded half up; an all-zero table
/// renders black.
RasterImage render_table(const CvTable& table, std::uint32_t zoom = 1);

/// ASCII PBM (P1) for bilevel images, ASCII PGM (P2, maxval 255) for gray.
void write_pnm(const RasterImage& image, std::ostream& out);
void write_pnm(const RasterImage& image, const std::string& path);

}  // namespace cvtfrac
