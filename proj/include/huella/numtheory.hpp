#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "huella/numexpr.hpp"

namespace huella::numtheory {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    bool operator==(const PrimePower&) const = default;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
bool is_prime(std::uint64_t n);

/// Prime factorization in increasing prime order (Pollard-Brent rho).
std::vector<PrimePower> factorize(std::uint64_t n);

/// Carmichael function lambda(n).
std::uint64_t carmichael(std::uint64_t n);

/// Smallest k > 0 with base^k == 1 (mod modulus); requires gcd(base, modulus) == 1
/// and modulus > 1. Derived from the factorization of lambda(modulus).
std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t modulus);

/// Same for arbitrary-precision moduli, by direct powering; empty when the order
/// exceeds `limit`.
std::optional<std::uint64_t> multiplicative_order(const BigInt& base, const BigInt& modulus,
                                                  std::uint64_t limit);

/// Splits n = 2^a * 5^b * rest with gcd(rest, 10) == 1.
struct TenSplit {
    unsigned twos = 0;
    unsigned fives = 0;
    BigInt rest;
};
TenSplit split_ten(const BigInt& n);

}  // namespace huella::numtheory
