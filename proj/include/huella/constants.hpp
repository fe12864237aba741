#pragma once

// Fixed-point evaluation of the transcendental constants.
//
// pi_fixed(p) and e_fixed(p) differ from c * 10^p by at most the number of
// series terms (times 16 for pi), since every division truncates. Callers keep
// guard digits beyond the ones they release.

#include <cstddef>
#include <string>

#include "huella/numexpr.hpp"

namespace huella::constants {

/// pi * 10^p via Machin: pi = 16 atan(1/5) - 4 atan(1/239).
BigInt pi_fixed(std::size_t p);

/// e * 10^p via sum of 1/k!.
BigInt e_fixed(std::size_t p);

/// atan(1/x) * 10^p by the alternating Taylor series, truncated divisions.
BigInt arctan_inverse_fixed(unsigned long x, std::size_t p);

/// First `count` fractional digits of the constant, released only once a
/// computation with `guard` guard digits agrees with one at `guard + 10`.
/// Guards grow by 10 until the two agree.
enum class Constant { pi, e };
std::string fractional_digits(Constant c, std::size_t count, std::size_t guard = 12);

}  // namespace huella::constants
