#include <doctest.h>

#include <cmath>
#include <sstream>

#include "cvtfrac/cv_table.hpp"
#include "cvtfrac/dimension.hpp"

using namespace cvtfrac;

TEST_CASE("similarity dimension matches the printed values") {
    CHECK(std::abs(similarity_dimension(Base(2)) - 1.585) < 0.001);
    CHECK(std::abs(similarity_dimension(Base(3)) - 1.630929) < 1e-6);
    CHECK(std::abs(similarity_dimension(Base(4)) - 1.6609) < 1e-4);
    CHECK(std::abs(similarity_dimension(Base(5)) - 1.682606) < 1e-6);
}

TEST_CASE("similarity dimension is increasing and bounded by 2") {
    double previous = similarity_dimension(Base(2));
    for (long long n = 3; n <= 10000; ++n) {
        const double d = similarity_dimension(Base(n));
        REQUIRE(d > previous);
        REQUIRE(d < 2.0);
        previous = d;
    }
}

TEST_CASE("dimension gap") {
    CHECK(dimension_gap(Base(2)) == doctest::Approx(0.4150374992788437).epsilon(1e-12));
    // log(2000/1001)/log(1000)
    CHECK(dimension_gap(Base(1000)) == doctest::Approx(0.10019863939488752).epsilon(1e-12));
    for (long long n : {2LL, 3LL, 17LL, 1000LL, 123456LL, 4000000000LL}) {
        const double x = static_cast<double>(n);
        CHECK(dimension_gap(Base(n)) * std::log(x) / std::log(2.0 * x / (x + 1.0)) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(dimension_gap(Base(n)) + similarity_dimension(Base(n)) == doctest::Approx(2.0).epsilon(1e-12));
    }
    double previous = dimension_gap(Base(2));
    for (long long n = 3; n <= 5000; ++n) {
        const double g = dimension_gap(Base(n));
        REQUIRE(g < previous);
        REQUIRE(g > 0.0);
        previous = g;
    }
}

TEST_CASE("base_for_target_dimension") {
    CHECK(base_for_target_dimension(1.68).base == 5);
    CHECK(base_for_target_dimension(1.66).base == 4);
    const double lower = std::log(3.0) / std::log(2.0);
    const TargetBase at_lower = base_for_target_dimension(lower);
    CHECK(at_lower.base == 2);
    CHECK(at_lower.achieved == lower);
    CHECK_FALSE(at_lower.capped);

    CHECK_THROWS_AS(base_for_target_dimension(1.5), OutOfRange);
    CHECK_THROWS_AS(base_for_target_dimension(2.0), OutOfRange);
    CHECK_THROWS_AS(base_for_target_dimension(std::nan("")), OutOfRange);

    const TargetBase capped = base_for_target_dimension(1.99);
    CHECK(capped.capped);
    CHECK(capped.base == kDefaultBaseSearchCap);
}

TEST_CASE("base_for_target_dimension agrees with a linear scan") {
    for (double t = 1.585; t <= 1.95; t += 0.0037) {
        const TargetBase r = base_for_target_dimension(t);
        CHECK(std::abs(r.achieved - t) < 0.03);
        if (r.base < 3000) {
            std::uint64_t best = 2;
            for (std::uint64_t n = 3; n <= 3000; ++n) {
                if (std::abs(similarity_dimension(Base(static_cast<long long>(n))) - t) <
                    std::abs(similarity_dimension(Base(static_cast<long long>(best))) - t)) {
                    best = n;
                }
            }
            CHECK(r.base == best);
        }
    }
}

TEST_CASE("box_count") {
    for (unsigned k = 1; k <= 6; ++k) {
        const CellSet s = zero_carry_set(Base(2), k);
        std::uint64_t box = 1;
        std::uint64_t expected = s.size();
        for (unsigned level = 0; level <= k; ++level) {
            CHECK(box_count(s, box) == expected);
            box *= 2;
            expected /= 3;
        }
    }
    CHECK(box_count(zero_carry_set(Base(3), 2), 3) == 6);
    CHECK(box_count(CellSet(Base(4), 3, {{63, 0}}), 64) == 1);
    CHECK_THROWS_AS(box_count(zero_carry_set(Base(3), 2), 2), InvalidScale);
    CHECK_THROWS_AS(box_count(zero_carry_set(Base(3), 2), 0), InvalidScale);
}

TEST_CASE("estimate_dimension on exact fractals") {
    const DimensionEstimate two = estimate_dimension(zero_carry_set(Base(2), 8));
    CHECK(std::abs(two.slope - 1.585) < 0.01);
    CHECK(two.fit_quality > 0.999);
    CHECK(two.scales == std::vector<std::uint64_t>{1, 2, 4, 8, 16, 32, 64, 128});
    CHECK(two.counts == std::vector<std::uint64_t>{6561, 2187, 729, 243, 81, 27, 9, 3});

    const DimensionEstimate five = estimate_dimension(zero_carry_set(Base(5), 4));
    CHECK(std::abs(five.slope - 1.6826) < 0.01);

    const DimensionEstimate plane = estimate_dimension(CellSet::full(Base(2), 7));
    CHECK(std::abs(plane.slope - 2.0) < 0.01);

    for (unsigned n = 2; n <= 5; ++n) {
        const unsigned k = n == 2 ? 8 : (n == 3 ? 5 : 4);
        const DimensionEstimate est = estimate_dimension(zero_carry_set(Base(n), k));
        CHECK(std::abs(est.slope - similarity_dimension(Base(n))) < 0.01);
        CHECK(est.fit_quality > 0.999);
        std::uint64_t expected = 1;
        for (std::size_t j = est.counts.size(); j-- > 0;) {
            expected *= n * (n + 1) / 2;
            CHECK(est.counts[j] == expected);
        }
    }
}

TEST_CASE("estimate_dimension errors") {
    CHECK_THROWS_AS(estimate_dimension(zero_carry_set(Base(3), 1)), InsufficientScales);
    CHECK_THROWS_AS(estimate_dimension(zero_carry_set(Base(3), 0)), InsufficientScales);
    CHECK_THROWS_AS(estimate_dimension(CellSet(Base(3), 3, {})), EmptyInput);
    const DimensionEstimate point = estimate_dimension(CellSet(Base(3), 3, {{4, 4}}));
    CHECK(point.slope == 0.0);
    CHECK(point.fit_quality == 1.0);
}

TEST_CASE("dimension CSV report") {
    std::ostringstream out;
    write_dimension_csv(estimate_dimension(zero_carry_set(Base(2), 2)), out);
    CHECK(out.str() ==
          "scale,count,log_scale,log_count\n"
          "1,9,1.386294361,2.197224577\n"
          "2,3,0.693147181,1.098612289\n"
          "slope,1.584962501\n"
          "fit_quality,1.000000000\n");
}
