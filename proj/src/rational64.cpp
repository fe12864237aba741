#include "huella/rational64.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace huella {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw ExactOverflow("exact coordinate overflow");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw ExactOverflow("exact coordinate overflow");
    return out;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b)
{
    const std::int64_t g = std::gcd(a, b);
    return checked_mul(a / g, b);
}

Q64 Q64::make(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (num == std::numeric_limits<std::int64_t>::min() ||
        den == std::numeric_limits<std::int64_t>::min())
        throw ExactOverflow("exact coordinate overflow");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
    return Q64{num, den};
}

Q64 operator+(Q64 a, Q64 b)
{
    const std::int64_t g = std::gcd(a.den, b.den);
    const std::int64_t den = checked_mul(a.den / g, b.den);
    const std::int64_t num = checked_add(checked_mul(a.num, b.den / g), checked_mul(b.num, a.den / g));
    return Q64::make(num, den);
}

Q64 operator-(Q64 a)
{
    if (a.num == std::numeric_limits<std::int64_t>::min()) throw ExactOverflow("exact coordinate overflow");
    return Q64{-a.num, a.den};
}

Q64 operator-(Q64 a, Q64 b) { return a + (-b); }

Q64 operator*(Q64 a, std::int64_t k)
{
    const std::int64_t g = std::gcd(k, a.den);
    if (g == 0) return Q64{};
    return Q64::make(checked_mul(a.num, k / g), a.den / g);
}

namespace {

std::int64_t parse_int(std::string_view text)
{
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) throw ExactOverflow("integer out of range: " + std::string(text));
    if (ec != std::errc{} || ptr != last || text.empty())
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    return value;
}

}  // namespace

Q64 parse_q64(std::string_view text)
{
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty coordinate");

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        return Q64::make(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view whole = text.substr(0, dot);
        const std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.find_first_not_of("0123456789") != std::string_view::npos)
            throw std::invalid_argument("bad decimal: '" + std::string(text) + "'");
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale = checked_mul(scale, 10);
        const bool negative = !whole.empty() && whole.front() == '-';
        const std::int64_t w = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole);
        const std::int64_t magnitude = checked_add(checked_mul(w < 0 ? -w : w, scale), parse_int(frac));
        return Q64::make(negative ? -magnitude : magnitude, scale);
    }
    return Q64::integer(parse_int(text));
}

std::string to_string(Q64 q)
{
    if (q.den == 1) return std::to_string(q.num);
    return std::to_string(q.num) + "/" + std::to_string(q.den);
}

}  // namespace huella
