#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "huella/numexpr.hpp"
#include "huella/rational64.hpp"

namespace huella {

enum class CoordMode { exact, floating };

std::string_view to_string(CoordMode mode);

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Vec2&) const = default;
};

struct QVec2 {
    Q64 x;
    Q64 y;
    bool operator==(const QVec2&) const = default;
};

/// Unknown builtin name or malformed custom map.
class MapError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The assignment digit -> plane vector. Immutable once built.
///
/// Exact maps keep rational coordinates and, for the walk, integer numerators
/// over one common denominator (scale). Both modes expose double values.
class VectorMap {
public:
    static VectorMap exact(std::string name, const std::array<QVec2, 10>& vectors);
    static VectorMap floating(std::string name, const std::array<Vec2, 10>& vectors);

    const std::string& name() const noexcept { return name_; }
    CoordMode mode() const noexcept { return mode_; }
    bool is_exact() const noexcept { return mode_ == CoordMode::exact; }

    Vec2 vector(Digit d) const { return {xs_[d], ys_[d]}; }
    /// Exact mode only.
    const QVec2& exact_vector(Digit d) const { return exact_[d]; }

    const std::array<double, 10>& xs() const noexcept { return xs_; }
    const std::array<double, 10>& ys() const noexcept { return ys_; }

    /// Exact mode: numerators over scale().
    std::int64_t scale() const noexcept { return scale_; }
    const std::array<std::int64_t, 10>& x_numerators() const noexcept { return xn_; }
    const std::array<std::int64_t, 10>& y_numerators() const noexcept { return yn_; }

private:
    VectorMap() = default;

    std::string name_;
    CoordMode mode_ = CoordMode::floating;
    std::array<double, 10> xs_{};
    std::array<double, 10> ys_{};
    std::array<QVec2, 10> exact_{};
    std::int64_t scale_ = 1;
    std::array<std::int64_t, 10> xn_{};
    std::array<std::int64_t, 10> yn_{};
};

/// "decagon": unit vectors at 36 degree steps (float).
/// "lattice": (1,0) (2,1) (1,2) (-1,2) (-2,1) and their negatives (exact).
VectorMap builtin_map(std::string_view name);

/// Custom map document:
///   {"name": "...", "mode": "exact" | "float",
///    "vectors": [[x0, y0], ..., [x9, y9]]}
/// Exact coordinates are integers or "p/q" strings; float coordinates are
/// numbers. Throws MapError.
VectorMap parse_map_json(std::string_view text);

}  // namespace huella
