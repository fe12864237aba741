#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "huella/kernels/kernels.hpp"
#include "huella/vector_map.hpp"

namespace huella {

using DigitCounts = kernels::DigitCounts;

/// Float walks are re-anchored from exact digit counts this often.
inline constexpr std::size_t checkpoint_interval = 1024;

struct CountCheckpoint {
    std::size_t step;
    DigitCounts counts;
};

/// A point of the walk; `exact` is set in exact mode.
struct Position {
    Vec2 value;
    std::optional<QVec2> exact;
};

/// The huella: p_0 = origin, p_k = p_{k-1} + v_{d_k}.
///
/// Coordinates are stored per axis. In exact mode xn/yn hold integer
/// numerators over `scale` and xs/ys their double values; in float mode only
/// xs/ys are filled.
struct WalkPath {
    CoordMode mode = CoordMode::floating;
    std::int64_t scale = 1;
    QVec2 origin;
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<std::int64_t> xn;
    std::vector<std::int64_t> yn;
    DigitSeq digits;
    /// Running digit counts at every multiple of checkpoint_interval and at the end.
    std::vector<CountCheckpoint> checkpoints;
    /// The driving expansion ended (the walk halts here).
    bool terminated = false;

    std::size_t size() const noexcept { return xs.size(); }
    std::size_t steps() const noexcept { return digits.size(); }
    Vec2 point(std::size_t k) const { return {xs[k], ys[k]}; }
    /// Exact mode only.
    QVec2 exact_point(std::size_t k) const;
    const DigitCounts& total_counts() const { return checkpoints.back().counts; }
};

/// Throws std::invalid_argument for digits above 9, MapError when exact
/// coordinates overflow.
WalkPath build_walk(std::span<const Digit> digits, const VectorMap& map, const QVec2& origin = {},
                    bool terminated = false);

/// origin + sum_d counts[d] * v_d, accumulated in digit order.
Position position_from_counts(const DigitCounts& counts, const VectorMap& map, const QVec2& origin = {});

}  // namespace huella
