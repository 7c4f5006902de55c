#include <doctest.h>

#include <random>
#include <sstream>

#include "cvtfrac/cv_table.hpp"
#include "support/oracles.hpp"

using namespace cvtfrac;

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e-- > 0) {
        r *= b;
    }
    return r;
}

}  // namespace

TEST_CASE("build_table small cases") {
    const CvTable t = build_table(Base(2), 2);
    CHECK(t.extent() == 4);
    CHECK(t.value(1, 1) == 2);
    CHECK(t.value(3, 3) == 6);
    CHECK(t.max_value() == 6);
    for (std::uint64_t b = 0; b < 4; ++b) {
        CHECK(t.value(0, b) == 0);
        CHECK(t.value(b, 0) == 0);
    }

    const CvTable t3 = build_table(Base(3), 1);
    std::vector<Cell> nonzero;
    for (std::uint32_t a = 0; a < 3; ++a) {
        for (std::uint32_t b = 0; b < 3; ++b) {
            if (t3.value(a, b) != 0) {
                nonzero.push_back({a, b});
            }
        }
    }
    CHECK(nonzero == std::vector<Cell>{{1, 2}, {2, 1}, {2, 2}});
}

TEST_CASE("build_table agrees with cvt and is symmetric") {
    const CvTable t = build_table(Base(5), 3);
    for (std::uint64_t a = 0; a < t.extent(); ++a) {
        for (std::uint64_t b = 0; b < t.extent(); ++b) {
            REQUIRE(t.value(a, b) == cvt(Natural(a), Natural(b), Base(5)));
            REQUIRE(t.value(a, b) == t.value(b, a));
        }
    }
}

TEST_CASE("parallel construction matches direct cvt") {
    const CvTable t = build_table(Base(2), 10);
    std::mt19937 rng(3);
    for (int i = 0; i < 5000; ++i) {
        const std::uint64_t a = rng() % 1024;
        const std::uint64_t b = rng() % 1024;
        REQUIRE(t.value(a, b) == 2 * (a & b));
    }
}

TEST_CASE("build_table size limit and argument checks") {
    CHECK_THROWS_AS(build_table(Base(2), 13), SizeLimit);
    CHECK_NOTHROW(build_table(Base(2), 12));
    CHECK_THROWS_AS(build_table(Base(3), 3, 26), SizeLimit);
    CHECK_THROWS_AS(build_table(Base(2), 0), ArgumentError);
}

TEST_CASE("value_cells examples") {
    const CvTable t = build_table(Base(2), 2);
    CHECK(value_cells(t, 0).size() == 9);
    CHECK(value_cells(t, 1).empty());
    const CellSet two = value_cells(t, 2);
    CHECK(std::vector<Cell>(two.cells().begin(), two.cells().end()) == std::vector<Cell>{{1, 1}, {1, 3}, {3, 1}});
    for (unsigned n = 2; n <= 6; ++n) {
        CHECK(value_cells(build_table(Base(n), 2), 1).empty());
    }
}

TEST_CASE("value_cells patterns are symmetric") {
    const CvTable t = build_table(Base(4), 3);
    for (std::uint64_t v : {0, 4, 16, 20, 64, 84}) {
        const CellSet s = value_cells(t, v);
        for (const Cell& c : s.cells()) {
            REQUIRE(s.contains({c.col, c.row}));
        }
    }
}

TEST_CASE("zero_carry_set examples") {
    const CellSet g = zero_carry_set(Base(2), 1);
    CHECK(std::vector<Cell>(g.cells().begin(), g.cells().end()) == std::vector<Cell>{{0, 0}, {0, 1}, {1, 0}});
    for (unsigned n = 2; n <= 12; ++n) {
        CHECK(zero_carry_set(Base(n), 1).size() == n * (n + 1) / 2);
    }
    const CellSet seed = zero_carry_set(Base(2), 0);
    CHECK(seed.extent() == 1);
    CHECK(seed.size() == 1);
    CHECK(seed.contains({0, 0}));
    CHECK(zero_carry_set(Base(3), 2).size() == 36);
}

TEST_CASE("zero_carry_set equals the table oracle and the count law") {
    for (unsigned n = 2; n <= 6; ++n) {
        for (unsigned k = 1; k <= 4; ++k) {
            const CellSet direct = zero_carry_set(Base(n), k);
            CHECK(direct.size() == ipow(n * (n + 1) / 2, k));
            CHECK(direct == value_cells(build_table(Base(n), k), 0));
        }
    }
}

TEST_CASE("zero_carry_set digit criterion on random cells") {
    const CellSet s = zero_carry_set(Base(7), 5);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20000; ++i) {
        const auto a = static_cast<std::uint32_t>(rng() % s.extent());
        const auto b = static_cast<std::uint32_t>(rng() % s.extent());
        REQUIRE(s.contains({a, b}) == oracle::no_digit_carries(a, b, 7));
    }
}

TEST_CASE("zero_carry_set size limits") {
    CHECK_THROWS_AS(zero_carry_set(Base(2), 21), SizeLimit);
    CHECK_THROWS_AS(zero_carry_set(Base(2), 6, 32), SizeLimit);
    // 3^17 cells exceed the sparse cell cap although the extent fits.
    CHECK_THROWS_AS(zero_carry_set(Base(2), 17), SizeLimit);
}

TEST_CASE("CellSet normalises and validates") {
    const CellSet s(Base(2), 1, {{1, 0}, {0, 1}, {1, 0}});
    CHECK(s.size() == 2);
    CHECK(s.cells()[0] == Cell{0, 1});
    CHECK_THROWS_AS(CellSet(Base(2), 1, {{2, 0}}), OutOfRange);
    CHECK(CellSet::full(Base(3), 2).size() == 81);
}

TEST_CASE("CSV exports") {
    std::ostringstream table_csv;
    write_table_csv(build_table(Base(2), 1), table_csv);
    CHECK(table_csv.str() == ",0,1\n0,0,0\n1,0,2\n");

    std::ostringstream cells_csv;
    write_cells_csv(zero_carry_set(Base(2), 1), cells_csv);
    CHECK(cells_csv.str() == "0,0\n0,1\n1,0\n");

    CHECK_THROWS_AS(write_cells_csv(zero_carry_set(Base(2), 1), "/nonexistent-dir/cells.csv"), IoError);
}
