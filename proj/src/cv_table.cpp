#include "cvtfrac/cv_table.hpp"

#include <algorithm>
#include <ostream>
#include <thread>

#include <fmt/format.h>

#include "write_file.hpp"

namespace cvtfrac {

namespace {

constexpr std::uint64_t kRowsPerWorker = 256;

}  // namespace

CvTable build_table(Base base, unsigned digits, std::uint64_t max_extent) {
    if (digits == 0) {
        throw ArgumentError("table needs at least one digit");
    }
    const std::uint64_t extent = checked_extent(base, digits, max_extent);
    if (extent * extent > kMaxCells) {
        throw SizeLimit(fmt::format("dense table of extent {} exceeds {} cells", extent, kMaxCells));
    }
    CvTable table(base, digits, extent);

    auto fill_rows = [&table, base, extent](std::uint64_t first, std::uint64_t last) {
        for (std::uint64_t a = first; a < last; ++a) {
            for (std::uint64_t b = 0; b < extent; ++b) {
                table.values_[a * extent + b] = static_cast<std::uint32_t>(cvt_u64(a, b, base));
            }
        }
    };

    const std::uint64_t hw = std::max(1U, std::thread::hardware_concurrency());
    const std::uint64_t workers = std::clamp<std::uint64_t>(extent / kRowsPerWorker, 1, hw);
    if (workers == 1) {
        fill_rows(0, extent);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::uint64_t chunk = (extent + workers - 1) / workers;
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::uint64_t first = w * chunk;
            const std::uint64_t last = std::min(extent, first + chunk);
            if (first < last) {
                pool.emplace_back(fill_rows, first, last);
            }
        }
    }
    table.max_value_ = table.values_.empty() ? 0U : *std::max_element(table.values_.begin(), table.values_.end());
    return table;
}

CellSet value_cells(const CvTable& table, std::uint64_t value) {
    std::vector<Cell> cells;
    const std::uint64_t extent = table.extent();
    for (std::uint64_t a = 0; a < extent; ++a) {
        for (std::uint64_t b = 0; b < extent; ++b) {
            if (table.value(a, b) == value) {
                cells.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
            }
        }
    }
    return CellSet(table.base(), table.digits(), std::move(cells), extent);
}

CellSet zero_carry_generator(Base base) {
    const unsigned n = base.value();
    if (n > kMaxSparseExtent) {
        throw SizeLimit(fmt::format("generator extent {} exceeds {}", n, kMaxSparseExtent));
    }
    if (std::uint64_t{n} * (n + 1) / 2 > kMaxCells) {
        throw SizeLimit(fmt::format("generator for base {} exceeds {} cells", n, kMaxCells));
    }
    std::vector<Cell> cells;
    for (std::uint32_t x = 0; x < n; ++x) {
        for (std::uint32_t y = 0; x + y < n; ++y) {
            cells.push_back({x, y});
        }
    }
    return CellSet(base, 1, std::move(cells));
}

CellSet zero_carry_set(Base base, unsigned depth, std::uint64_t max_extent) {
    checked_extent(base, depth, std::min(max_extent, kMaxSparseExtent));
    if (depth == 0) {
        return CellSet(base, 0, {{0, 0}});
    }
    return substitute(zero_carry_generator(base), depth, max_extent);
}

void write_table_csv(const CvTable& table, std::ostream& out) {
    const std::uint64_t extent = table.extent();
    for (std::uint64_t b = 0; b < extent; ++b) {
        out << ',' << b;
    }
    out << '\n';
    for (std::uint64_t a = 0; a < extent; ++a) {
        out << a;
        for (std::uint64_t b = 0; b < extent; ++b) {
            out << ',' << table.value(a, b);
        }
        out << '\n';
    }
}

void write_table_csv(const CvTable& table, const std::string& path) {
    detail::write_file(path, [&](std::ostream& out) { write_table_csv(table, out); });
}

}  // namespace cvtfrac
