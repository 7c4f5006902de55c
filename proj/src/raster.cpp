#include "cvtfrac/raster.hpp"

#include <ostream>

#include <fmt/format.h>

#include "write_file.hpp"

namespace cvtfrac {

namespace {

std::uint32_t checked_side(std::uint64_t extent, std::uint32_t zoom) {
    if (zoom == 0) {
        throw ArgumentError("zoom must be positive");
    }
    if (extent == 0 || extent > kMaxImageSide / zoom) {
        throw SizeLimit(fmt::format("image side {} x zoom {} exceeds {}", extent, zoom, kMaxImageSide));
    }
    return static_cast<std::uint32_t>(extent * zoom);
}

RasterImage blank(std::uint32_t side, PixelMode mode) {
    return RasterImage{side, side, mode, std::vector<std::uint8_t>(static_cast<std::size_t>(side) * side, 0)};
}

void fill_block(RasterImage& image, std::uint64_t row, std::uint64_t col, std::uint32_t zoom,
                std::uint8_t value) {
    for (std::uint64_t y = row * zoom; y < (row + 1) * zoom; ++y) {
        for (std::uint64_t x = col * zoom; x < (col + 1) * zoom; ++x) {
            image.pixels[y * image.width + x] = value;
        }
    }
}

}  // namespace

RasterImage render_cellset(const CellSet& cells, std::uint32_t zoom) {
    RasterImage image = blank(checked_side(cells.extent(), zoom), PixelMode::bilevel);
    for (const Cell& c : cells.cells()) {
        fill_block(image, c.row, c.col, zoom, 1);
    }
    return image;
}

RasterImage render_table(const CvTable& table, std::uint32_t zoom) {
    RasterImage image = blank(checked_side(table.extent(), zoom), PixelMode::gray);
    const std::uint64_t max_value = table.max_value();
    if (max_value == 0) {
        return image;
    }
    for (std::uint64_t a = 0; a < table.extent(); ++a) {
        for (std::uint64_t b = 0; b < table.extent(); ++b) {
            const std::uint64_t v = table.value(a, b);
            // round(255 v / max) with halves rounded up, in integers
            const auto level = static_cast<std::uint8_t>((2 * 255 * v + max_value) / (2 * max_value));
            fill_block(image, a, b, zoom, level);
        }
    }
    return image;
}

void write_pnm(const RasterImage& image, std::ostream& out) {
    if (image.pixels.size() != static_cast<std::size_t>(image.width) * image.height) {
        throw ArgumentError("image pixel count does not match its dimensions");
    }
    const bool bilevel = image.mode == PixelMode::bilevel;
    if (bilevel) {
        for (std::uint8_t p : image.pixels) {
            if (p > 1) {
                throw ArgumentError("bilevel image holds a pixel other than 0 or 1");
            }
        }
    }
    out << (bilevel ? "P1\n" : "P2\n") << image.width << ' ' << image.height << '\n';
    if (!bilevel) {
        out << "255\n";
    }
    std::string line;
    for (std::uint32_t y = 0; y < image.height; ++y) {
        line.clear();
        for (std::uint32_t x = 0; x < image.width; ++x) {
            if (x != 0) {
                line += ' ';
            }
            line += std::to_string(image.pixels[static_cast<std::size_t>(y) * image.width + x]);
        }
        line += '\n';
        out << line;
    }
}

void write_pnm(const RasterImage& image, const std::string& path) {
    detail::write_file(path, [&](std::ostream& out) { write_pnm(image, out); });
}

}  // namespace cvtfrac
