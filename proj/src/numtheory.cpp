#include "huella/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace huella::numtheory {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for all 64-bit n.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

std::uint64_t pollard_brent(std::uint64_t n)
{
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        const std::uint64_t block = 128;
        std::uint64_t r = 1;
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += block;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes)
{
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    const std::uint64_t d = pollard_brent(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

std::vector<PrimePower> factorize(std::uint64_t n)
{
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());

    std::vector<PrimePower> out;
    for (std::uint64_t p : primes) {
        if (!out.empty() && out.back().prime == p)
            ++out.back().exponent;
        else
            out.push_back({p, 1});
    }
    return out;
}

std::uint64_t carmichael(std::uint64_t n)
{
    std::uint64_t lambda = 1;
    for (const auto& [p, k] : factorize(n)) {
        std::uint64_t term = p - 1;
        for (unsigned i = 1; i < k; ++i) term *= p;
        if (p == 2 && k >= 3) term /= 2;
        lambda = std::lcm(lambda, term);
    }
    return lambda;
}

std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t modulus)
{
    if (modulus < 2) throw std::invalid_argument("multiplicative order needs modulus > 1");
    if (std::gcd(base % modulus, modulus) != 1)
        throw std::invalid_argument("base and modulus are not coprime");
    std::uint64_t order = carmichael(modulus);
    for (const auto& [p, k] : factorize(order)) {
        for (unsigned i = 0; i < k && order % p == 0; ++i) {
            if (pow_mod(base, order / p, modulus) != 1) break;
            order /= p;
        }
    }
    return order;
}

std::optional<std::uint64_t> multiplicative_order(const BigInt& base, const BigInt& modulus,
                                                  std::uint64_t limit)
{
    if (modulus < 2) throw std::invalid_argument("multiplicative order needs modulus > 1");
    if (modulus.fits_ulong_p() && base.fits_ulong_p())
        return multiplicative_order(base.get_ui(), modulus.get_ui());
    const BigInt b = base % modulus;
    BigInt power = b;
    for (std::uint64_t k = 1; k <= limit; ++k) {
        if (power == 1) return k;
        power = power * b % modulus;
    }
    return std::nullopt;
}

TenSplit split_ten(const BigInt& n)
{
    TenSplit out;
    out.rest = abs(n);
    if (out.rest == 0) return out;
    out.twos = static_cast<unsigned>(mpz_remove(out.rest.get_mpz_t(), out.rest.get_mpz_t(),
                                                BigInt(2).get_mpz_t()));
    out.fives = static_cast<unsigned>(mpz_remove(out.rest.get_mpz_t(), out.rest.get_mpz_t(),
                                                 BigInt(5).get_mpz_t()));
    return out;
}

}  // namespace huella::numtheory
