#include <limits>

#include "doctest.h"
#include "huella/format.hpp"
#include "huella/rational64.hpp"
#include "support.hpp"

using namespace huella;

TEST_CASE("normalization and arithmetic")
{
    CHECK(Q64::make(2, 4) == Q64{1, 2});
    CHECK(Q64::make(3, -6) == Q64{-1, 2});
    CHECK(Q64::make(0, -7) == Q64{0, 1});
    CHECK(Q64{1, 2} + Q64{1, 3} == Q64{5, 6});
    CHECK(Q64{1, 2} - Q64{1, 2} == Q64{0, 1});
    CHECK(-Q64{1, 2} == Q64{-1, 2});
    CHECK(Q64{1, 6} * 3 == Q64{1, 2});
    CHECK_THROWS_AS(Q64::make(1, 0), std::invalid_argument);
}

TEST_CASE("parsing coordinates")
{
    CHECK(parse_q64("3/4") == Q64{3, 4});
    CHECK(parse_q64("-2") == Q64{-2, 1});
    CHECK(parse_q64("0.125") == Q64{1, 8});
    CHECK(parse_q64("-1.5") == Q64{-3, 2});
    CHECK(parse_q64(" 7 ") == Q64{7, 1});
    CHECK_THROWS_AS(parse_q64("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_q64("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_q64(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_q64("99999999999999999999"), ExactOverflow);
    CHECK(to_string(Q64{-3, 2}) == "-3/2");
    CHECK(to_string(Q64{4, 1}) == "4");
}

TEST_CASE("overflow is detected")
{
    const auto big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(checked_add(big, 1), ExactOverflow);
    CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), ExactOverflow);
    CHECK_THROWS_AS((Q64{big, 1} + Q64{1, 1}), ExactOverflow);
    CHECK(checked_add(big - 1, 1) == big);
    CHECK(lcm64(4, 6) == 12);
}

TEST_CASE("significant-digit formatting of doubles")
{
    CHECK(format_sig(0.0) == "0");
    CHECK(format_sig(-0.0) == "0");
    CHECK(format_sig(1.0) == "1");
    CHECK(format_sig(-1.0) == "-1");
    CHECK(format_sig(0.30901699437494745) == "0.309016994375");
    CHECK(format_sig(1e-7) == "1e-07");
    CHECK(format_sig(123456789012345.0) == "1.23456789012e+14");
}

TEST_CASE("exact formatting agrees with printf on exactly representable values")
{
    testing::Rng rng(31);
    for (int i = 0; i < 20000; ++i) {
        // Dyadic values are exact doubles, so %.12g is the correctly rounded reference.
        const std::int64_t num = rng.between(-(1LL << 50), 1LL << 50);
        const std::int64_t den = 1LL << rng.below(40);
        const Q64 q = Q64::make(num, den);
        char ref[64];
        std::snprintf(ref, sizeof ref, "%.12g", static_cast<double>(num) / static_cast<double>(den));
        std::string expected = ref;
        if (expected == "-0") expected = "0";
        CAPTURE(num);
        CAPTURE(den);
        CHECK(format_sig(q) == expected);
    }
}

TEST_CASE("exact formatting of non-dyadic rationals")
{
    CHECK(format_sig(Q64{1, 3}) == "0.333333333333");
    CHECK(format_sig(Q64{2, 3}) == "0.666666666667");
    CHECK(format_sig(Q64{-1, 7}) == "-0.142857142857");
    CHECK(format_sig(Q64{0, 1}) == "0");
    CHECK(format_sig(Q64{1, 100000}) == "1e-05");
    CHECK(format_sig(Q64{1, 10000}) == "0.0001");
    CHECK(format_sig(Q64{999999999999, 1}) == "999999999999");
    CHECK(format_sig(Q64{9999999999995, 10}) == "1e+12");
    // Ties go to the even neighbour: 0.1000000000005 -> 0.1, 0.1000000000015 -> 0.100000000002
    CHECK(format_sig(Q64{1000000000005, 10000000000000}) == "0.1");
    CHECK(format_sig(Q64{1000000000015, 10000000000000}) == "0.100000000002");
}
