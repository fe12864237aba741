#include "huella/numexpr.hpp"

#include <cctype>
#include <utility>

namespace huella {

namespace {

std::string describe_error(ParseErrorKind kind, std::size_t position, const std::string& detail)
{
    std::string out{error_code(kind)};
    out += " at position ";
    out += std::to_string(position);
    if (!detail.empty()) {
        out += ": ";
        out += detail;
    }
    return out;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool iequals(std::string_view a, std::string_view b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    }
    return true;
}

// Recursive-descent cursor over the trimmed input; positions refer to the
// original untrimmed text.
class Cursor {
public:
    Cursor(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    std::size_t position() const { return offset_ + pos_; }
    void advance() { ++pos_; }

    bool accept(char c)
    {
        if (peek() == c && !done()) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(ParseErrorKind kind, const std::string& detail) const
    {
        throw ParseError(kind, position(), detail);
    }

    [[noreturn]] void fail_here(const std::string& expected) const
    {
        if (done())
            fail(ParseErrorKind::unexpected_end, "expected " + expected);
        fail(ParseErrorKind::unexpected_character,
             "expected " + expected + ", found '" + std::string(1, peek()) + "'");
    }

    // One or more decimal digits.
    std::string_view digits()
    {
        const std::size_t start = pos_;
        while (!done() && is_digit(text_[pos_])) ++pos_;
        if (pos_ == start) fail_here("digit");
        return text_.substr(start, pos_ - start);
    }

    // Optional sign followed by digits.
    BigInt signed_integer()
    {
        bool negative = false;
        if (accept('-'))
            negative = true;
        else
            accept('+');
        BigInt value(std::string(digits()), 10);
        return negative ? BigInt(-value) : value;
    }

    void expect_end() const
    {
        if (!done()) fail(ParseErrorKind::unexpected_character,
                          "unexpected trailing '" + std::string(1, peek()) + "'");
    }

private:
    std::string_view text_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

NumberSpec parse_sqrt(Cursor& cur)
{
    if (!cur.accept('(')) cur.fail_here("'('");
    const std::size_t radicand_pos = cur.position();
    BigInt radicand = cur.signed_integer();
    if (!cur.accept(')')) cur.fail_here("')'");
    cur.expect_end();
    if (sgn(radicand) <= 0)
        throw ParseError(ParseErrorKind::non_positive_radicand, radicand_pos,
                         "sqrt needs a positive radicand");
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    if (root * root == radicand) return Rational{root, 1};
    return Sqrt{radicand};
}

NumberSpec parse_literal(Cursor& cur)
{
    DigitLiteral literal;
    if (cur.done()) cur.fail(ParseErrorKind::unexpected_end, "expected digit");
    while (!cur.done()) {
        const char c = cur.peek();
        if (!is_digit(c))
            cur.fail(ParseErrorKind::non_digit_in_literal,
                     "'" + std::string(1, c) + "' is not a digit");
        literal.fractional.push_back(static_cast<Digit>(c - '0'));
        cur.advance();
    }
    return literal;
}

NumberSpec parse_numeric(Cursor& cur)
{
    const bool negative = cur.peek() == '-';
    BigInt whole = cur.signed_integer();

    if (cur.accept('/')) {
        const std::size_t den_pos = cur.position();
        BigInt den = cur.signed_integer();
        cur.expect_end();
        if (den == 0)
            throw ParseError(ParseErrorKind::zero_denominator, den_pos, "denominator is zero");
        return make_rational(std::move(whole), std::move(den));
    }

    if (cur.accept('.')) {
        const std::string_view frac = cur.digits();
        cur.expect_end();
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(frac.size()));
        BigInt frac_value(std::string(frac), 10);
        BigInt magnitude = abs(whole) * scale + frac_value;
        return make_rational(negative ? BigInt(-magnitude) : magnitude, scale);
    }

    cur.expect_end();
    return Rational{whole, 1};
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t position, const std::string& detail)
    : std::runtime_error(describe_error(kind, position, detail)), kind_(kind), position_(position)
{
}

std::string_view error_code(ParseErrorKind kind)
{
    switch (kind) {
    case ParseErrorKind::empty_input: return "empty_input";
    case ParseErrorKind::unexpected_character: return "unexpected_character";
    case ParseErrorKind::unexpected_end: return "unexpected_end";
    case ParseErrorKind::zero_denominator: return "zero_denominator";
    case ParseErrorKind::non_positive_radicand: return "non_positive_radicand";
    case ParseErrorKind::non_digit_in_literal: return "non_digit_in_literal";
    }
    return "parse_error";
}

Rational make_rational(BigInt num, BigInt den)
{
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (sgn(den) < 0) {
        num = -num;
        den = -den;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
    return Rational{std::move(num), std::move(den)};
}

NumberSpec parse_number(std::string_view text)
{
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (begin == end) throw ParseError(ParseErrorKind::empty_input, begin, "no number given");

    const std::string_view body = text.substr(begin, end - begin);
    if (iequals(body, "pi")) return Pi{};
    if (iequals(body, "e")) return E{};

    if (body.size() >= 4 && iequals(body.substr(0, 4), "sqrt")) {
        Cursor cur(body.substr(4), begin + 4);
        return parse_sqrt(cur);
    }
    if (body.size() >= 7 && iequals(body.substr(0, 7), "digits:")) {
        Cursor cur(body.substr(7), begin + 7);
        return parse_literal(cur);
    }

    Cursor cur(body, begin);
    const char first = cur.peek();
    if (!is_digit(first) && first != '-' && first != '+') cur.fail_here("number, 'pi', 'e', 'sqrt(' or 'digits:'");
    return parse_numeric(cur);
}

std::string to_string(const NumberSpec& spec)
{
    struct Visitor {
        std::string operator()(const Rational& r) const
        {
            if (r.den == 1) return r.num.get_str();
            return r.num.get_str() + "/" + r.den.get_str();
        }
        std::string operator()(const Sqrt& s) const { return "sqrt(" + s.radicand.get_str() + ")"; }
        std::string operator()(const Pi&) const { return "pi"; }
        std::string operator()(const E&) const { return "e"; }
        std::string operator()(const DigitLiteral& d) const
        {
            std::string out = "digits:";
            for (Digit digit : d.fractional) out.push_back(static_cast<char>('0' + digit));
            return out;
        }
    };
    return std::visit(Visitor{}, spec);
}

bool is_rational(const NumberSpec& spec) { return std::holds_alternative<Rational>(spec); }

bool is_negative(const NumberSpec& spec)
{
    if (const auto* r = std::get_if<Rational>(&spec)) return sgn(r->num) < 0;
    return false;
}

DigitSeq integer_part_digits(const NumberSpec& spec)
{
    BigInt whole;
    if (const auto* r = std::get_if<Rational>(&spec)) {
        whole = abs(r->num) / r->den;
    } else if (const auto* s = std::get_if<Sqrt>(&spec)) {
        mpz_sqrt(whole.get_mpz_t(), s->radicand.get_mpz_t());
    } else if (std::holds_alternative<Pi>(spec)) {
        whole = 3;
    } else if (std::holds_alternative<E>(spec)) {
        whole = 2;
    } else {
        whole = std::get<DigitLiteral>(spec).integer_part;
    }
    DigitSeq out;
    for (char c : whole.get_str()) out.push_back(static_cast<Digit>(c - '0'));
    return out;
}

}  // namespace huella
