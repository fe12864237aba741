#include <numeric>

#include "doctest.h"
#include "huella/numtheory.hpp"
#include "support.hpp"

using namespace huella;
using namespace huella::numtheory;

namespace {

std::uint64_t brute_order(std::uint64_t base, std::uint64_t m)
{
    std::uint64_t x = base % m;
    for (std::uint64_t k = 1;; ++k) {
        if (x == 1 % m) return k;
        x = x * base % m;
    }
}

std::uint64_t brute_carmichael(std::uint64_t n)
{
    std::uint64_t l = 1;
    for (std::uint64_t a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1) l = std::lcm(l, brute_order(a, n));
    return l;
}

}  // namespace

TEST_CASE("primality against a sieve")
{
    const std::size_t limit = 100000;
    std::vector<bool> composite(limit, false);
    composite[0] = composite[1] = true;
    for (std::size_t i = 2; i * i < limit; ++i)
        if (!composite[i])
            for (std::size_t j = i * i; j < limit; j += i) composite[j] = true;
    for (std::size_t n = 0; n < limit; ++n) CHECK(is_prime(n) == !composite[n]);
    CHECK(is_prime(18446744073709551557ULL));
    CHECK_FALSE(is_prime(18446744073709551555ULL));
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("factorization multiplies back")
{
    testing::Rng rng(21);
    for (int i = 0; i < 3000; ++i) {
        const std::uint64_t n = 1 + rng.below(i < 1500 ? 1000000 : ~0ULL - 1);
        std::uint64_t product = 1;
        std::uint64_t last = 0;
        for (const auto& pp : factorize(n)) {
            CHECK(is_prime(pp.prime));
            CHECK(pp.prime > last);
            last = pp.prime;
            for (unsigned e = 0; e < pp.exponent; ++e) product *= pp.prime;
        }
        CHECK(product == n);
    }
    CHECK(factorize(1).empty());
    const auto semiprime = factorize(4294967291ULL * 4294967279ULL);
    REQUIRE(semiprime.size() == 2);
    CHECK(semiprime[0].prime == 4294967279ULL);
}

TEST_CASE("Carmichael function matches brute force")
{
    for (std::uint64_t n = 1; n <= 400; ++n) CHECK(carmichael(n) == brute_carmichael(n));
}

TEST_CASE("multiplicative order of 10 matches brute force")
{
    for (std::uint64_t m = 2; m <= 20000; ++m) {
        if (m % 2 == 0 || m % 5 == 0) continue;
        CHECK(multiplicative_order(10, m) == brute_order(10, m));
    }
    CHECK(multiplicative_order(10, 7) == 6);
    CHECK(multiplicative_order(10, 9967) == 9966);
    CHECK(multiplicative_order(10, 9973) == 554);
}

TEST_CASE("big-modulus order")
{
    CHECK(multiplicative_order(BigInt(10), BigInt(7), 100) == std::optional<std::uint64_t>(6));
    // 10^n - 1 style moduli beyond 64 bits: the order of 10 mod (10^30 - 1)/9 is 30.
    const BigInt repunit("111111111111111111111111111111");
    CHECK(multiplicative_order(BigInt(10), repunit, 100) == std::optional<std::uint64_t>(30));
    CHECK_FALSE(multiplicative_order(BigInt(10), repunit, 29).has_value());
}

TEST_CASE("splitting off twos and fives")
{
    const auto s = split_ten(BigInt(2 * 2 * 2 * 5 * 7 * 3));
    CHECK(s.twos == 3);
    CHECK(s.fives == 1);
    CHECK(s.rest == 21);
    const auto one = split_ten(BigInt(1));
    CHECK(one.twos == 0);
    CHECK(one.rest == 1);
}
