#pragma once

// Deterministic text forms of coordinates: printf("%.12g") semantics with
// negative zero printed as "0", for doubles and for exact rationals.

#include <string>

#include "huella/rational64.hpp"

namespace huella {

inline constexpr int significant_digits = 12;

std::string format_sig(double value);

/// Exact decimal rounding (ties to even) of num/den; den > 0.
std::string format_sig(std::int64_t num, std::int64_t den);

inline std::string format_sig(Q64 q) { return format_sig(q.num, q.den); }

/// Maps -0.0 to +0.0.
inline double positive_zero(double v) { return v + 0.0; }

}  // namespace huella
