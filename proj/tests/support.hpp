#pragma once

// Shared test helpers: seeded generators and reference computations that do
// not go through the library.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "huella/numexpr.hpp"

namespace testing {

inline constexpr const char* pi_50 = "14159265358979323846264338327950288419716939937510";
inline constexpr const char* e_50 = "71828182845904523536028747135266249775724709369995";
inline constexpr const char* sqrt2_50 = "41421356237309504880168872420969807856967187537694";
inline constexpr const char* sqrt3_50 = "73205080756887729352744634150587236694280525381038";

struct Rng {
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine); }
    std::int64_t between(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine);
    }
    huella::DigitSeq digits(std::size_t n)
    {
        huella::DigitSeq out(n);
        for (auto& d : out) d = static_cast<huella::Digit>(below(10));
        return out;
    }
    std::mt19937_64 engine;
};

/// Fractional digits of |p|/q by schoolbook long division, n digits, padded.
inline std::string long_division(mpz_class p, const mpz_class& q, std::size_t n)
{
    if (p < 0) p = -p;
    mpz_class r = p % q;
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
        r *= 10;
        mpz_class d = r / q;
        out.push_back(static_cast<char>('0' + d.get_ui()));
        r -= d * q;
    }
    return out;
}

inline std::string as_string(const huella::DigitSeq& digits)
{
    std::string s;
    for (auto d : digits) s.push_back(static_cast<char>('0' + d));
    return s;
}

}  // namespace testing
