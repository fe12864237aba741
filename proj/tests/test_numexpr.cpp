#include <cmath>
#include <set>

#include "doctest.h"
#include "huella/numexpr.hpp"
#include "support.hpp"

using namespace huella;

namespace {

Rational rational(long p, long q) { return Rational{p, q}; }

ParseError parse_failure(std::string_view text)
{
    try {
        parse_number(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error for '" << std::string(text) << "'");
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("parse examples")
{
    CHECK(parse_number("1/14") == NumberSpec{rational(1, 14)});
    CHECK(parse_number("pi") == NumberSpec{Pi{}});
    CHECK(parse_number("PI") == NumberSpec{Pi{}});
    CHECK(parse_number(" e ") == NumberSpec{E{}});
    CHECK(parse_number("2/4") == NumberSpec{rational(1, 2)});
    CHECK(parse_number("sqrt(4)") == NumberSpec{rational(2, 1)});
    CHECK(parse_number("sqrt(2)") == NumberSpec{Sqrt{2}});
    CHECK(parse_number("0.25") == NumberSpec{rational(1, 4)});
    CHECK(parse_number("-0.25") == NumberSpec{rational(-1, 4)});
    CHECK(parse_number("7") == NumberSpec{rational(7, 1)});
    CHECK(parse_number("3/-6") == NumberSpec{rational(-1, 2)});
    CHECK(parse_number("-3/-6") == NumberSpec{rational(1, 2)});
    CHECK(parse_number("digits:0505") == NumberSpec{DigitLiteral{0, {0, 5, 0, 5}}});
}

TEST_CASE("big integers survive parsing")
{
    const auto spec = parse_number("123456789012345678901234567890/3");
    const auto& r = std::get<Rational>(spec);
    CHECK(r.num == mpz_class("41152263004115226300411522630"));
    CHECK(r.den == 1);
}

TEST_CASE("errors carry kind and position")
{
    CHECK(parse_failure("").kind() == ParseErrorKind::empty_input);
    CHECK(parse_failure("   ").kind() == ParseErrorKind::empty_input);

    auto zero = parse_failure("1/0");
    CHECK(zero.kind() == ParseErrorKind::zero_denominator);
    CHECK(zero.position() == 2);

    auto root = parse_failure("sqrt(-4)");
    CHECK(root.kind() == ParseErrorKind::non_positive_radicand);
    CHECK(root.position() == 5);
    CHECK(parse_failure("sqrt(0)").kind() == ParseErrorKind::non_positive_radicand);

    auto lit = parse_failure("digits:12a4");
    CHECK(lit.kind() == ParseErrorKind::non_digit_in_literal);
    CHECK(lit.position() == 9);

    CHECK(parse_failure("1/").kind() == ParseErrorKind::unexpected_end);
    CHECK(parse_failure("sqrt(2").kind() == ParseErrorKind::unexpected_end);
    auto junk = parse_failure("1/7x");
    CHECK(junk.kind() == ParseErrorKind::unexpected_character);
    CHECK(junk.position() == 3);
    CHECK(parse_failure("pie").kind() == ParseErrorKind::unexpected_character);
    CHECK(parse_failure("1.").kind() == ParseErrorKind::unexpected_end);
}

TEST_CASE("error codes are distinct")
{
    std::set<std::string_view> codes;
    for (auto k : {ParseErrorKind::empty_input, ParseErrorKind::unexpected_character, ParseErrorKind::unexpected_end,
                   ParseErrorKind::zero_denominator, ParseErrorKind::non_positive_radicand,
                   ParseErrorKind::non_digit_in_literal})
        codes.insert(error_code(k));
    CHECK(codes.size() == 6);
}

TEST_CASE("canonical text round-trips")
{
    testing::Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        const long p = rng.between(-100000, 100000);
        const long q = rng.between(1, 100000);
        const NumberSpec spec = make_rational(p, q);
        CHECK(parse_number(to_string(spec)) == spec);
    }
    for (const char* text : {"pi", "e", "sqrt(12)", "digits:000123", "-5/3", "0"})
        CHECK(parse_number(to_string(parse_number(text))) == parse_number(text));
}

TEST_CASE("fractions agree with exact decimal literals")
{
    testing::Rng rng(12);
    for (int i = 0; i < 500; ++i) {
        // a / (2^i 5^j) always has a finite decimal literal.
        const long a = rng.between(-10000, 10000);
        const long q = (1L << rng.below(6)) * static_cast<long>(std::pow(5, rng.below(5)));
        const mpz_class num = a;
        const mpz_class whole = abs(num) / q;
        const unsigned places = 10;
        mpz_class scaled = (abs(num) % q) * mpz_class(10000000000L) / q;
        std::string frac = scaled.get_str();
        frac.insert(0, places - frac.size(), '0');
        const std::string literal = std::string(a < 0 ? "-" : "") + whole.get_str() + "." + frac;
        CAPTURE(literal);
        CHECK(parse_number(literal) == parse_number(std::to_string(a) + "/" + std::to_string(q)));
    }
}

TEST_CASE("fuzz: every string parses or fails with one positioned error")
{
    testing::Rng rng(13);
    const std::string alphabet = "0123456789/.-+ sqrtpiedg:()xX\t";
    for (int i = 0; i < 20000; ++i) {
        std::string text;
        const auto len = rng.below(12);
        for (std::uint64_t k = 0; k < len; ++k) text.push_back(alphabet[rng.below(alphabet.size())]);
        try {
            const NumberSpec spec = parse_number(text);
            CHECK(parse_number(to_string(spec)) == spec);
        } catch (const ParseError& e) {
            CHECK(e.position() <= text.size());
        }
    }
}

TEST_CASE("sign and integer part")
{
    CHECK(is_negative(parse_number("-1/3")));
    CHECK_FALSE(is_negative(parse_number("1/3")));
    CHECK(integer_part_digits(parse_number("314/100")) == DigitSeq{3});
    CHECK(integer_part_digits(parse_number("-1234/10")) == DigitSeq{1, 2, 3});
    CHECK(integer_part_digits(parse_number("1/7")) == DigitSeq{0});
    CHECK(integer_part_digits(parse_number("pi")) == DigitSeq{3});
    CHECK(integer_part_digits(parse_number("e")) == DigitSeq{2});
    CHECK(integer_part_digits(parse_number("sqrt(200)")) == DigitSeq{1, 4});
    CHECK(is_rational(parse_number("sqrt(9)")));
    CHECK_FALSE(is_rational(parse_number("sqrt(8)")));
}
