#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>

#include "huella/digits.hpp"
#include "huella/walk.hpp"

namespace huella {

inline constexpr std::size_t default_min_windows = 3;
inline constexpr double default_float_tolerance = 1e-6;
inline constexpr std::uint64_t unlimited_steps = std::numeric_limits<std::uint64_t>::max();

/// Sum of mapped vectors; `exact` is set for exact maps.
struct Drift {
    Vec2 value;
    std::optional<QVec2> exact;
};

/// p_{n+lag} = p_n + drift for every n >= start in the examined path.
struct DriftReport {
    std::size_t lag = 0;
    std::size_t start = 0;
    Drift drift;
    bool closed = false;
};

struct DetectOptions {
    std::size_t max_lag = 2000;
    std::size_t min_windows = default_min_windows;
    double tolerance = default_float_tolerance;
    /// Cooperative cap on element comparisons; running out gives an inconclusive result.
    std::uint64_t step_budget = unlimited_steps;
};

enum class DetectOutcome { found, absent, inconclusive };

struct Detection {
    DetectOutcome outcome = DetectOutcome::absent;
    std::optional<DriftReport> report;
    /// Steps of the path that were examined.
    std::size_t horizon = 0;
    /// Largest lag that could be examined at this horizon.
    std::size_t max_lag = 0;
    bool budget_exhausted = false;
};

struct Terminating {
    std::size_t steps = 0;
};

struct Periodic {
    std::size_t preperiod = 0;
    std::size_t lag = 0;
    /// Translation by one period of `lag` digits, from `preperiod` on.
    DriftReport drift;
    /// Minimal translation found by the geometric detector, when it ran.
    std::optional<DriftReport> geometric;
};

/// No translation verified within the horizon; never a claim of irrationality.
struct NoPeriodFound {
    std::size_t horizon = 0;
    std::size_t max_lag = 0;
    /// The horizon was too short (or the step budget ran out) for a conclusive negative.
    bool inconclusive = false;
};

using WalkClass = std::variant<Terminating, Periodic, NoPeriodFound>;

/// Arithmetic and geometric classification disagree: an implementation bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct ClassifyOptions {
    std::size_t max_lag = 2000;
    std::size_t min_windows = default_min_windows;
    double tolerance = default_float_tolerance;
    std::uint64_t step_budget = unlimited_steps;
    /// Integer-part digits walked before the fractional ones.
    std::size_t leading_digits = 0;
};

Drift drift_vector(std::span<const Digit> period_digits, const VectorMap& map);

/// Smallest lag L <= max_lag (then smallest start) with p_{n+L} - p_n constant
/// over at least min_windows whole windows. Candidates come from the border
/// (failure) function of the digit string, taken over vector classes so that
/// digits sharing a vector compare equal, plus every lag up to 64; each is
/// then verified on the points.
Detection detect_translation(const WalkPath& path, const VectorMap& map, const DetectOptions& options);

/// Rationals are classified from their period structure and cross-checked
/// against detect_translation (ConsistencyError on disagreement); other
/// numbers rely on the detector alone.
WalkClass classify_walk(const NumberSpec& spec, const WalkPath& path, const VectorMap& map,
                        const ClassifyOptions& options);

struct BoundingBox {
    Vec2 min;
    Vec2 max;
};

/// Tight axis-aligned bounds; the path must be non-empty.
BoundingBox bounding_box(const WalkPath& path);

bool is_zero(const Drift& drift, double tolerance);

}  // namespace huella
