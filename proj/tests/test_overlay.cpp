#include <doctest.h>

#include <cmath>
#include <sstream>

#include "cvtfrac/cv_table.hpp"
#include "cvtfrac/overlay.hpp"

using namespace cvtfrac;

namespace {

std::vector<Cell> to_vector(const CellSet& s) {
    return {s.cells().begin(), s.cells().end()};
}

}  // namespace

TEST_CASE("overflow generator examples") {
    CHECK(to_vector(overflow_generator(Base(2), Base(3))) == std::vector<Cell>{{0, 2}, {1, 1}, {2, 0}});
    CHECK(to_vector(overflow_generator(Base(3), Base(4))) == std::vector<Cell>{{0, 3}, {1, 2}, {2, 1}, {3, 0}});
    CHECK_THROWS_AS(overflow_generator(Base(2), Base(4)), InvalidPair);
    CHECK_THROWS_AS(overflow_generator(Base(3), Base(2)), InvalidPair);
}

TEST_CASE("overflow generator is the anti-diagonal and completes the small generator") {
    for (unsigned k = 2; k <= 9; ++k) {
        const CellSet over = overflow_generator(Base(k), Base(k + 1));
        CHECK(over.size() == k + 1);
        CHECK(over.extent() == k + 1);
        for (const Cell& c : over.cells()) {
            CHECK(c.row + c.col == k);
        }
        const CellSet big = zero_carry_generator(Base(k + 1));
        const CellSet small = zero_carry_generator(Base(k));
        std::size_t covered = 0;
        for (const Cell& c : big.cells()) {
            const bool in_small = small.contains(c);
            const bool in_over = over.contains(c);
            CHECK(in_small != in_over);
            covered += in_small ? 1 : 0;
        }
        CHECK(covered + over.size() == big.size());
        CHECK(covered == small.size());
    }
}

TEST_CASE("iterate overflow fractal") {
    const CellSet gen = overflow_generator(Base(2), Base(3));
    CHECK(iterate_overflow_fractal(gen, 1) == gen);
    CHECK(iterate_overflow_fractal(gen, 3).size() == 27);
    const CellSet single(Base(4), 1, {{2, 1}});
    for (unsigned d = 1; d <= 5; ++d) {
        CHECK(iterate_overflow_fractal(single, d).size() == 1);
    }
    CHECK_THROWS_AS(iterate_overflow_fractal(gen, 0), ArgumentError);
    CHECK_THROWS_AS(iterate_overflow_fractal(gen, 13), SizeLimit);
}

TEST_CASE("iterated overflow fractal count law and self-similar box counts") {
    for (unsigned k = 2; k <= 5; ++k) {
        const CellSet gen = overflow_generator(Base(k), Base(k + 1));
        const unsigned depth = 4;
        const CellSet fractal = iterate_overflow_fractal(gen, depth);
        std::uint64_t expected = 1;
        for (unsigned i = 0; i < depth; ++i) {
            expected *= gen.size();
        }
        CHECK(fractal.size() == expected);
        std::uint64_t box = 1;
        for (unsigned j = 0; j <= depth; ++j) {
            CHECK(box_count(fractal, box) == expected);
            box *= gen.extent();
            expected /= gen.size();
        }
    }
}

TEST_CASE("analyze_overlay reports measurement next to the claim") {
    const OverlayReport r2 = analyze_overlay(Base(2), 6);
    CHECK(r2.overflow_cells.size() == 3);
    CHECK(std::abs(r2.measured.slope - 1.0) < 0.02);
    CHECK(std::abs(r2.measured.slope - r2.expected_slope) < 0.02);
    CHECK(r2.claimed_increment == doctest::Approx(std::log(3.0) / std::log(2.0)));

    const OverlayReport r3 = analyze_overlay(Base(3), 5);
    CHECK(r3.overflow_cells.size() == 4);
    CHECK(std::abs(r3.measured.slope - 1.0) < 0.02);

    CHECK_THROWS_AS(analyze_overlay(Base(2), 1), InsufficientScales);

    std::ostringstream text;
    write_overlay_text(r2, text);
    CHECK(text.str().find("measured box-counting slope: 1.000000") != std::string::npos);
    CHECK(text.str().find("claimed increment (log 3 / log 2): 1.584963") != std::string::npos);
    CHECK(text.str().find("overflow cells (3): (0,2) (1,1) (2,0)") != std::string::npos);

    std::ostringstream csv;
    write_overlay_csv(analyze_overlay(Base(2), 3), csv);
    CHECK(csv.str() == "scale,count\n1,27\n3,9\n9,3\n");
}
