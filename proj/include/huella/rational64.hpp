#pragma once

// Small exact rationals for vector-map coordinates and walk origins.
// All arithmetic is overflow-checked; overflow raises ExactOverflow.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace huella {

class ExactOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Reduced fraction with 64-bit parts, den > 0.
struct Q64 {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Q64 make(std::int64_t num, std::int64_t den);
    static Q64 integer(std::int64_t value) { return Q64{value, 1}; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_zero() const { return num == 0; }

    bool operator==(const Q64&) const = default;
};

Q64 operator+(Q64 a, Q64 b);
Q64 operator-(Q64 a);
Q64 operator-(Q64 a, Q64 b);
Q64 operator*(Q64 a, std::int64_t k);

/// Parses "p/q", "p" or a decimal literal "[-]i.f". Throws std::invalid_argument.
Q64 parse_q64(std::string_view text);

/// "p/q", or "p" when q == 1.
std::string to_string(Q64 q);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace huella
