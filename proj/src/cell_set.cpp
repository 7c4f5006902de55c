#include "cvtfrac/cell_set.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include <fmt/format.h>

#include "write_file.hpp"

namespace cvtfrac {

std::uint64_t checked_extent(Base base, unsigned depth, std::uint64_t limit) {
    std::uint64_t extent = 1;
    for (unsigned i = 0; i < depth; ++i) {
        if (extent > limit / base.value()) {
            throw SizeLimit(fmt::format("extent {}^{} exceeds the limit {}", base.value(), depth, limit));
        }
        extent *= base.value();
    }
    if (extent > limit) {
        throw SizeLimit(fmt::format("extent {}^{} exceeds the limit {}", base.value(), depth, limit));
    }
    return extent;
}

CellSet::CellSet(Base base, unsigned depth, std::vector<Cell> cells, std::uint64_t max_extent)
    : base_(base),
      depth_(depth),
      extent_(checked_extent(base, depth, std::min(max_extent, kMaxSparseExtent))),
      cells_(std::move(cells)) {
    for (const Cell& c : cells_) {
        if (c.row >= extent_ || c.col >= extent_) {
            throw OutOfRange(fmt::format("cell ({},{}) outside extent {}", c.row, c.col, extent_));
        }
    }
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

CellSet CellSet::full(Base base, unsigned depth, std::uint64_t max_extent) {
    const std::uint64_t extent = checked_extent(base, depth, std::min(max_extent, kMaxSparseExtent));
    if (extent * extent > kMaxCells) {
        throw SizeLimit(fmt::format("full set of extent {} exceeds {} cells", extent, kMaxCells));
    }
    std::vector<Cell> cells;
    cells.reserve(extent * extent);
    for (std::uint32_t r = 0; r < extent; ++r) {
        for (std::uint32_t c = 0; c < extent; ++c) {
            cells.push_back({r, c});
        }
    }
    return CellSet(base, depth, std::move(cells), max_extent);
}

bool CellSet::contains(Cell cell) const {
    return std::binary_search(cells_.begin(), cells_.end(), cell);
}

CellSet substitute(const CellSet& generator, unsigned depth, std::uint64_t max_extent) {
    const Base base = generator.base();
    if (generator.depth() != 1) {
        throw ArgumentError(fmt::format("generator must have depth 1, got {}", generator.depth()));
    }
    checked_extent(base, depth, std::min(max_extent, kMaxSparseExtent));

    std::uint64_t expected = 1;
    for (unsigned i = 0; i < depth; ++i) {
        expected *= generator.size();
        if (expected > kMaxCells) {
            throw SizeLimit(fmt::format("substitution to depth {} exceeds {} cells", depth, kMaxCells));
        }
    }

    std::vector<Cell> current{{0, 0}};
    std::vector<Cell> next;
    const auto m = static_cast<std::uint32_t>(base.value());
    for (unsigned level = 0; level < depth; ++level) {
        next.clear();
        next.reserve(current.size() * generator.size());
        for (const Cell& parent : current) {
            for (const Cell& g : generator.cells()) {
                next.push_back({parent.row * m + g.row, parent.col * m + g.col});
            }
        }
        std::swap(current, next);
    }
    return CellSet(base, depth, std::move(current), max_extent);
}

void write_cells_csv(const CellSet& cells, std::ostream& out) {
    for (const Cell& c : cells.cells()) {
        out << c.row << ',' << c.col << '\n';
    }
}

void write_cells_csv(const CellSet& cells, const std::string& path) {
    detail::write_file(path, [&](std::ostream& out) { write_cells_csv(cells, out); });
}

}  // namespace cvtfrac
