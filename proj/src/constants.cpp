#include "huella/constants.hpp"

#include <stdexcept>

namespace huella::constants {

namespace {

BigInt power_of_ten(std::size_t p)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(p));
    return out;
}

BigInt fixed(Constant c, std::size_t p)
{
    return c == Constant::pi ? pi_fixed(p) : e_fixed(p);
}

// Fractional digits 1..count of a fixed-point value scaled by 10^(count+guard).
std::string fraction_prefix(const BigInt& value, std::size_t count, std::size_t guard)
{
    const std::string text = value.get_str();
    const std::size_t scale = count + guard;
    if (text.size() <= scale) throw std::logic_error("constant below 1");
    return text.substr(text.size() - scale, count);
}

}  // namespace

BigInt arctan_inverse_fixed(unsigned long x, std::size_t p)
{
    const BigInt x_squared = BigInt(x) * x;
    BigInt power = power_of_ten(p) / x;
    BigInt sum = power;
    BigInt term;
    for (unsigned long k = 1;; ++k) {
        power /= x_squared;
        term = power / (2 * k + 1);
        if (term == 0) break;
        if (k & 1)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

BigInt pi_fixed(std::size_t p)
{
    return 16 * arctan_inverse_fixed(5, p) - 4 * arctan_inverse_fixed(239, p);
}

BigInt e_fixed(std::size_t p)
{
    BigInt term = power_of_ten(p);
    BigInt sum = 0;
    for (unsigned long k = 1; term != 0; ++k) {
        sum += term;
        term /= k;
    }
    return sum;
}

std::string fractional_digits(Constant c, std::size_t count, std::size_t guard)
{
    if (count == 0) return {};
    for (;; guard += 10) {
        const std::string coarse = fraction_prefix(fixed(c, count + guard), count, guard);
        const std::string fine = fraction_prefix(fixed(c, count + guard + 10), count, guard + 10);
        if (coarse == fine) return coarse;
    }
}

}  // namespace huella::constants
