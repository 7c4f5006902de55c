#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cvtfrac/radix.hpp"

namespace cvtfrac {

/// Sparse paths (cell sets without a dense table) may reach this extent.
inline constexpr std::uint64_t kMaxSparseExtent = std::uint64_t{1} << 20;
/// Cell sets larger than this are refused rather than exhausting memory.
inline constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 26;

struct Cell {
    std::uint32_t row = 0;
    std::uint32_t col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// base^depth, or SizeLimit when it exceeds `limit`.
std::uint64_t checked_extent(Base base, unsigned depth, std::uint64_t limit);

/// A grid pattern over [0, base^depth)^2 held as a sorted, duplicate-free
/// list of cells.
class CellSet {
public:
    /// Sorts and deduplicates `cells`; throws OutOfRange for coordinates
    /// outside the extent.
    CellSet(Base base, unsigned depth, std::vector<Cell> cells,
            std::uint64_t max_extent = kMaxSparseExtent);

    /// Every cell of the extent.
    static CellSet full(Base base, unsigned depth, std::uint64_t max_extent = kMaxSparseExtent);

    [[nodiscard]] Base base() const noexcept { return base_; }
    [[nodiscard]] unsigned depth() const noexcept { return depth_; }
    [[nodiscard]] std::uint64_t extent() const noexcept { return extent_; }
    [[nodiscard]] std::span<const Cell> cells() const noexcept { return cells_; }
    [[nodiscard]] std::size_t size() const noexcept { return cells_.size(); }
    [[nodiscard]] bool empty() const noexcept { return cells_.empty(); }
    [[nodiscard]] bool contains(Cell cell) const;

    friend bool operator==(const CellSet&, const CellSet&) = default;

private:
    Base base_;
    unsigned depth_;
    std::uint64_t extent_;
    std::vector<Cell> cells_;
};

/// Substitution iteration: starting from the single cell of extent 1, every
/// retained cell is replaced `depth` times by a scaled copy of `generator`.
/// The result has extent generator.extent()^depth and |generator|^depth cells.
CellSet substitute(const CellSet& generator, unsigned depth,
                   std::uint64_t max_extent = kMaxSparseExtent);

/// "row,col" per line in sorted order.
void write_cells_csv(const CellSet& cells, std::ostream& out);
void write_cells_csv(const CellSet& cells, const std::string& path);

}  // namespace cvtfrac
