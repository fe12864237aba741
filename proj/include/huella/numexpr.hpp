#pragma once

// Number expressions: the textual inputs whose decimal expansions are walked.
//
// Grammar (surrounding whitespace ignored):
//   INT "/" INT            rational, reduced, sign carried by the numerator
//   [-]INT "." DIGITS      exact decimal literal, reduced
//   [-]INT                 integer
//   pi | e                 constants (case-insensitive)
//   sqrt(INT)              square root; perfect squares collapse to integers
//   digits:DIGITS          literal fractional digits, integer part 0

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace huella {

using BigInt = mpz_class;
using Digit = std::uint8_t;
using DigitSeq = std::vector<Digit>;

/// Reduced fraction: gcd(|num|, den) == 1 and den > 0.
struct Rational {
    BigInt num{0};
    BigInt den{1};
    bool operator==(const Rational&) const = default;
};

/// Square root of a positive integer that is not a perfect square.
struct Sqrt {
    BigInt radicand;
    bool operator==(const Sqrt&) const = default;
};

struct Pi {
    bool operator==(const Pi&) const = default;
};

struct E {
    bool operator==(const E&) const = default;
};

struct DigitLiteral {
    BigInt integer_part{0};
    DigitSeq fractional;
    bool operator==(const DigitLiteral&) const = default;
};

using NumberSpec = std::variant<Rational, Sqrt, Pi, E, DigitLiteral>;

enum class ParseErrorKind {
    empty_input,
    unexpected_character,
    unexpected_end,
    zero_denominator,
    non_positive_radicand,
    non_digit_in_literal,
};

/// Error raised by parse_number; position is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t position, const std::string& detail);

    ParseErrorKind kind() const noexcept { return kind_; }
    std::size_t position() const noexcept { return position_; }

private:
    ParseErrorKind kind_;
    std::size_t position_;
};

/// Stable identifier for an error kind, used in JSON error payloads.
std::string_view error_code(ParseErrorKind kind);

NumberSpec parse_number(std::string_view text);

/// Reduces num/den; throws std::invalid_argument when den == 0.
Rational make_rational(BigInt num, BigInt den);

/// Canonical text form; re-parsing it yields an equal NumberSpec.
std::string to_string(const NumberSpec& spec);

bool is_rational(const NumberSpec& spec);
bool is_negative(const NumberSpec& spec);

/// Decimal digits of floor(|value|), most significant first ("0" gives [0]).
DigitSeq integer_part_digits(const NumberSpec& spec);

}  // namespace huella
