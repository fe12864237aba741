#include "huella/format.hpp"

#include <cstdio>
#include <stdexcept>

#include <gmpxx.h>

namespace huella {

std::string format_sig(double value)
{
    if (value == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
    return buf;
}

namespace {

void strip_fraction_zeros(std::string& s)
{
    const auto dot = s.find('.');
    if (dot == std::string::npos) return;
    std::size_t end = s.size();
    while (end > dot + 1 && s[end - 1] == '0') --end;
    if (end == dot + 1) --end;
    s.erase(end);
}

}  // namespace

std::string format_sig(std::int64_t num, std::int64_t den)
{
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    if (num == 0) return "0";
    const bool negative = num < 0;
    mpz_class a(static_cast<long>(num));
    a = abs(a);
    const mpz_class b(static_cast<long>(den));

    // Decimal exponent e with 10^e <= a/b < 10^(e+1).
    long e = static_cast<long>(a.get_str().size()) - static_cast<long>(b.get_str().size());
    auto pow10 = [](long k) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
        return p;
    };
    auto below = [&](long k) { return k >= 0 ? a < b * pow10(k) : a * pow10(-k) < b; };
    if (below(e)) --e;

    // scaled = a/b * 10^(P-1-e), rounded half to even.
    const long shift = significant_digits - 1 - e;
    mpz_class numer = shift >= 0 ? mpz_class(a * pow10(shift)) : a;
    mpz_class denom = shift >= 0 ? b : mpz_class(b * pow10(-shift));
    mpz_class q;
    mpz_class r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
    const int cmp = ::cmp(mpz_class(2 * r), denom);
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
    if (q == pow10(significant_digits)) {
        q /= 10;
        ++e;
    }

    const std::string digits = q.get_str();
    std::string out = negative ? "-" : "";
    if (e < -4 || e >= significant_digits) {
        std::string mantissa = digits.substr(0, 1) + "." + digits.substr(1);
        strip_fraction_zeros(mantissa);
        char exp[24];
        std::snprintf(exp, sizeof exp, "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
        return out + mantissa + exp;
    }
    std::string fixed;
    if (e >= 0) {
        fixed = digits.substr(0, static_cast<std::size_t>(e + 1)) + "." + digits.substr(static_cast<std::size_t>(e + 1));
    } else {
        fixed = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    }
    strip_fraction_zeros(fixed);
    return out + fixed;
}

}  // namespace huella
