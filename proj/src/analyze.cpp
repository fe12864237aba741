#include "huella/analyze.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

namespace huella {

namespace {

constexpr std::size_t short_lag_scan = 64;

// Digit -> class id, equal vectors sharing an id.
std::array<std::uint8_t, 10> vector_classes(const VectorMap& map)
{
    std::array<std::uint8_t, 10> cls{};
    for (int d = 0; d < 10; ++d) {
        cls[d] = static_cast<std::uint8_t>(d);
        for (int e = 0; e < d; ++e) {
            const bool same = map.is_exact() ? map.exact_vector(static_cast<Digit>(d)) ==
                                                   map.exact_vector(static_cast<Digit>(e))
                                             : map.vector(static_cast<Digit>(d)) == map.vector(static_cast<Digit>(e));
            if (same) {
                cls[d] = cls[e];
                break;
            }
        }
    }
    return cls;
}

// Smallest periods of the suffixes of `symbols`: the failure function of the
// reversed string gives, for each suffix length m, period m - border(m).
// Keeps periods p <= max_lag with m >= windows * p.
std::set<std::size_t> border_candidates(const std::vector<std::uint8_t>& symbols, std::size_t max_lag,
                                        std::size_t windows)
{
    const std::size_t n = symbols.size();
    std::set<std::size_t> out;
    if (n == 0) return out;
    auto at = [&](std::size_t i) { return symbols[n - 1 - i]; };
    std::vector<std::size_t> border(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t k = border[i - 1];
        while (k > 0 && at(i) != at(k)) k = border[k - 1];
        if (at(i) == at(k)) ++k;
        border[i] = k;
    }
    for (std::size_t m = 1; m <= n; ++m) {
        const std::size_t period = m - border[m - 1];
        if (period <= max_lag && m >= windows * period) out.insert(period);
    }
    return out;
}

Drift path_difference(const WalkPath& path, std::size_t from, std::size_t to)
{
    Drift d;
    d.value = {path.xs[to] - path.xs[from], path.ys[to] - path.ys[from]};
    if (path.mode == CoordMode::exact) {
        d.exact = QVec2{Q64::make(path.xn[to] - path.xn[from], path.scale),
                        Q64::make(path.yn[to] - path.yn[from], path.scale)};
    }
    return d;
}

// Largest n in [begin, end) where p_{n+lag} - p_n differs from the value at
// the end of the path, or npos.
struct LagScan {
    const WalkPath& path;
    double tolerance;

    std::size_t last_mismatch(std::size_t lag, std::size_t begin, std::size_t end) const
    {
        const std::size_t last = path.steps() - lag;
        const kernels::KernelTable& k = kernels::active();
        if (path.mode == CoordMode::exact) {
            const kernels::LagQuery<std::int64_t> q{path.xn.data(), path.yn.data(), lag, begin, end,
                                                    path.xn[last + lag] - path.xn[last],
                                                    path.yn[last + lag] - path.yn[last]};
            return k.last_mismatch_i64(q);
        }
        const kernels::LagQuery<double> q{path.xs.data(), path.ys.data(), lag, begin, end,
                                          path.xs[last + lag] - path.xs[last], path.ys[last + lag] - path.ys[last]};
        return k.last_mismatch_f64(q, tolerance);
    }
};

bool verify_lag_from(const WalkPath& path, std::size_t lag, std::size_t start, const Drift& drift, double tolerance)
{
    if (start + lag > path.steps()) return true;
    const std::size_t end = path.steps() - lag + 1;
    const kernels::KernelTable& k = kernels::active();
    if (path.mode == CoordMode::exact) {
        // Drift numerators over the path's scale.
        const std::int64_t dx = checked_mul(drift.exact->x.num, path.scale / drift.exact->x.den);
        const std::int64_t dy = checked_mul(drift.exact->y.num, path.scale / drift.exact->y.den);
        return k.last_mismatch_i64({path.xn.data(), path.yn.data(), lag, start, end, dx, dy}) == kernels::npos;
    }
    return k.last_mismatch_f64({path.xs.data(), path.ys.data(), lag, start, end, drift.value.x, drift.value.y},
                               tolerance) == kernels::npos;
}

}  // namespace

bool is_zero(const Drift& drift, double tolerance)
{
    if (drift.exact) return drift.exact->x.is_zero() && drift.exact->y.is_zero();
    return std::fabs(drift.value.x) < tolerance && std::fabs(drift.value.y) < tolerance;
}

Drift drift_vector(std::span<const Digit> period_digits, const VectorMap& map)
{
    DigitCounts counts{};
    for (Digit d : period_digits) {
        if (d > 9) throw std::invalid_argument("digit out of range");
        ++counts[d];
    }
    const Position p = position_from_counts(counts, map);
    return Drift{p.value, p.exact};
}

Detection detect_translation(const WalkPath& path, const VectorMap& map, const DetectOptions& options)
{
    if (options.max_lag == 0 || options.min_windows == 0)
        throw std::invalid_argument("max_lag and min_windows must be positive");
    const std::size_t n = path.steps();
    Detection out;
    out.horizon = n;
    out.max_lag = std::min(options.max_lag, n / options.min_windows);
    const bool conclusive_horizon = path.size() >= (options.min_windows + 1) * options.max_lag;

    std::uint64_t budget = options.step_budget;
    auto charge = [&](std::uint64_t cost) {
        if (cost > budget) {
            budget = 0;
            return false;
        }
        budget -= cost;
        return true;
    };

    if (out.max_lag == 0) {
        out.outcome = conclusive_horizon ? DetectOutcome::absent : DetectOutcome::inconclusive;
        return out;
    }

    if (!charge(n)) {
        out.budget_exhausted = true;
        out.outcome = DetectOutcome::inconclusive;
        return out;
    }
    const auto cls = vector_classes(map);
    std::vector<std::uint8_t> symbols(n);
    for (std::size_t i = 0; i < n; ++i) symbols[i] = cls[path.digits[i]];
    std::set<std::size_t> candidates = border_candidates(symbols, out.max_lag, options.min_windows);
    for (std::size_t lag = 1; lag <= std::min(out.max_lag, short_lag_scan); ++lag) candidates.insert(lag);

    const LagScan scan{path, options.tolerance};
    for (std::size_t lag : candidates) {
        const std::size_t end = n - lag;
        // Only starts that leave min_windows whole windows can succeed.
        const std::size_t needed = options.min_windows * lag;
        const std::size_t scan_len = static_cast<std::size_t>(std::min<std::uint64_t>(end, budget));
        const std::size_t begin = end - scan_len;
        const std::size_t bad = scan.last_mismatch(lag, begin, end);
        std::size_t start;
        if (bad != kernels::npos) {
            charge(end - bad);
            start = bad + 1;
        } else {
            charge(scan_len);
            if (begin > 0) {
                // Budget ran out before the run of matches was bounded.
                out.budget_exhausted = true;
                break;
            }
            start = 0;
        }
        if (n - start >= needed) {
            DriftReport report;
            report.lag = lag;
            report.start = start;
            report.drift = path_difference(path, n - lag, n);
            report.closed = is_zero(report.drift, options.tolerance);
            out.report = report;
            out.outcome = DetectOutcome::found;
            return out;
        }
        if (budget == 0) {
            out.budget_exhausted = true;
            break;
        }
    }

    out.outcome = (conclusive_horizon && !out.budget_exhausted) ? DetectOutcome::absent : DetectOutcome::inconclusive;
    return out;
}

WalkClass classify_walk(const NumberSpec& spec, const WalkPath& path, const VectorMap& map,
                        const ClassifyOptions& options)
{
    const DetectOptions detect_options{options.max_lag, options.min_windows, options.tolerance, options.step_budget};
    const std::size_t n = path.steps();

    const auto* rational = std::get_if<Rational>(&spec);
    std::optional<PeriodInfo> info;
    if (rational) {
        try {
            info = rational_period(*rational);
        } catch (const BudgetExceeded&) {
            // Period too long to spell out; fall back to the detector.
        }
    }

    if (!info) {
        const Detection found = detect_translation(path, map, detect_options);
        if (found.outcome == DetectOutcome::found) {
            return Periodic{found.report->start, found.report->lag, *found.report, found.report};
        }
        return NoPeriodFound{found.horizon, found.max_lag, found.outcome == DetectOutcome::inconclusive};
    }

    const std::size_t preperiod = options.leading_digits + info->preperiod;
    DigitSeq period = info->period_digits;
    if (info->terminating()) {
        // Zero padding continues the expansion with the period "0".
        if (n <= preperiod) return Terminating{preperiod};
        period = {0};
    }
    const std::size_t lag = period.size();

    Periodic result;
    result.preperiod = preperiod;
    result.lag = lag;
    result.drift.lag = lag;
    result.drift.start = preperiod;
    result.drift.drift = drift_vector(period, map);
    result.drift.closed = is_zero(result.drift.drift, options.tolerance);

    const bool covered = lag <= options.max_lag && n >= preperiod + options.min_windows * lag;
    if (!covered) return result;

    if (!verify_lag_from(path, lag, preperiod, result.drift.drift, options.tolerance))
        throw ConsistencyError("digit period " + std::to_string(lag) + " is not a translation of the walk");

    const Detection found = detect_translation(path, map, detect_options);
    if (found.budget_exhausted) return result;
    if (found.outcome != DetectOutcome::found)
        throw ConsistencyError("detector missed the digit period " + std::to_string(lag));
    if (found.report->lag > lag)
        throw ConsistencyError("detector lag " + std::to_string(found.report->lag) + " exceeds digit period " +
                               std::to_string(lag));
    if (found.report->lag == lag && found.report->start > preperiod)
        throw ConsistencyError("detector start " + std::to_string(found.report->start) + " exceeds preperiod " +
                               std::to_string(preperiod));
    result.geometric = found.report;
    return result;
}

BoundingBox bounding_box(const WalkPath& path)
{
    if (path.size() == 0) throw std::invalid_argument("bounding box of an empty path");
    const kernels::KernelTable& k = kernels::active();
    const kernels::MinMax x = k.minmax(path.xs);
    const kernels::MinMax y = k.minmax(path.ys);
    return BoundingBox{{x.min, y.min}, {x.max, y.max}};
}

}  // namespace huella
