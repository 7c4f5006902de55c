#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cvtfrac/cell_set.hpp"
#include "cvtfrac/radix.hpp"

namespace cvtfrac {

/// Dense tables are capped at this extent per side by default.
inline constexpr std::uint64_t kDefaultTableExtent = 4096;

/// Carry values cvt(a, b) for every a, b in [0, base^digits). Row index is
/// the augend a, column index the addend b.
class CvTable {
public:
    [[nodiscard]] Base base() const noexcept { return base_; }
    [[nodiscard]] unsigned digits() const noexcept { return digits_; }
    [[nodiscard]] std::uint64_t extent() const noexcept { return extent_; }

    [[nodiscard]] std::uint32_t value(std::uint64_t a, std::uint64_t b) const {
        return values_.at(a * extent_ + b);
    }
    [[nodiscard]] std::uint32_t max_value() const noexcept { return max_value_; }

private:
    friend CvTable build_table(Base base, unsigned digits, std::uint64_t max_extent);

    CvTable(Base base, unsigned digits, std::uint64_t extent)
        : base_(base), digits_(digits), extent_(extent), values_(extent * extent, 0U) {}

    Base base_;
    unsigned digits_;
    std::uint64_t extent_;
    std::uint32_t max_value_ = 0;
    std::vector<std::uint32_t> values_;
};

/// Throws ArgumentError for digits == 0 and SizeLimit when base^digits
/// exceeds `max_extent`.
CvTable build_table(Base base, unsigned digits, std::uint64_t max_extent = kDefaultTableExtent);

/// All cells of `table` whose carry value equals `value`.
CellSet value_cells(const CvTable& table, std::uint64_t value);

/// Cells with cvt(a, b) == 0 over [0, base^depth)^2, built by substituting
/// the generator {(x, y) : x + y < base} into itself.
CellSet zero_carry_set(Base base, unsigned depth, std::uint64_t max_extent = kMaxSparseExtent);

/// Depth-1 zero-carry generator {(x, y) : x + y < base}.
CellSet zero_carry_generator(Base base);

/// Header row and column 0..extent-1, carry values in decimal.
void write_table_csv(const CvTable& table, std::ostream& out);
void write_table_csv(const CvTable& table, const std::string& path);

}  // namespace cvtfrac
