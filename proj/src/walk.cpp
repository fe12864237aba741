#include "huella/walk.hpp"

#include <algorithm>
#include <cstdlib>

namespace huella {

namespace {

void check_digits(std::span<const Digit> digits)
{
    for (std::size_t k = 0; k < digits.size(); ++k) {
        if (digits[k] > 9)
            throw std::invalid_argument("digit " + std::to_string(digits[k]) + " at index " + std::to_string(k) +
                                        " is out of range");
    }
}

std::int64_t magnitude(std::int64_t v) { return v < 0 ? -v : v; }

// Numerators of the map and origin over one shared denominator.
struct ExactFrame {
    std::int64_t scale;
    std::array<std::int64_t, 10> xn;
    std::array<std::int64_t, 10> yn;
    std::int64_t ox;
    std::int64_t oy;
};

ExactFrame exact_frame(const VectorMap& map, const QVec2& origin)
{
    try {
        ExactFrame f;
        f.scale = lcm64(lcm64(map.scale(), origin.x.den), origin.y.den);
        const std::int64_t factor = f.scale / map.scale();
        for (int d = 0; d < 10; ++d) {
            f.xn[d] = checked_mul(map.x_numerators()[d], factor);
            f.yn[d] = checked_mul(map.y_numerators()[d], factor);
        }
        f.ox = checked_mul(origin.x.num, f.scale / origin.x.den);
        f.oy = checked_mul(origin.y.num, f.scale / origin.y.den);
        return f;
    } catch (const ExactOverflow&) {
        throw MapError("origin and map coordinates overflow a common 64-bit denominator");
    }
}

void scan_exact(std::vector<std::int64_t>& values, std::int64_t init, std::int64_t max_step)
{
    // Prefix sums stay below 2^62 whenever |init| + n * max_step does.
    constexpr std::int64_t limit = std::int64_t{1} << 62;
    const auto n = static_cast<std::int64_t>(values.size());
    const bool safe = max_step == 0 || (magnitude(init) < limit && n <= (limit - magnitude(init)) / max_step);
    std::span<std::int64_t> steps(values.data() + 1, values.size() - 1);
    if (safe) {
        kernels::active().inclusive_scan_i64(steps, init);
        return;
    }
    std::int64_t running = init;
    try {
        for (auto& v : steps) {
            running = checked_add(running, v);
            v = running;
        }
    } catch (const ExactOverflow&) {
        throw MapError("exact walk coordinates overflow 64-bit numerators");
    }
}

DigitCounts add_counts(DigitCounts a, const DigitCounts& b)
{
    for (int d = 0; d < 10; ++d) a[d] += b[d];
    return a;
}

}  // namespace

QVec2 WalkPath::exact_point(std::size_t k) const
{
    return {Q64::make(xn[k], scale), Q64::make(yn[k], scale)};
}

Position position_from_counts(const DigitCounts& counts, const VectorMap& map, const QVec2& origin)
{
    Position out;
    if (map.is_exact()) {
        const ExactFrame f = exact_frame(map, origin);
        __int128 x = f.ox;
        __int128 y = f.oy;
        for (int d = 0; d < 10; ++d) {
            x += static_cast<__int128>(counts[d]) * f.xn[d];
            y += static_cast<__int128>(counts[d]) * f.yn[d];
        }
        constexpr __int128 max64 = static_cast<__int128>(INT64_MAX);
        if (x > max64 || x < -max64 || y > max64 || y < -max64)
            throw MapError("exact position overflows 64-bit numerators");
        const QVec2 exact{Q64::make(static_cast<std::int64_t>(x), f.scale),
                          Q64::make(static_cast<std::int64_t>(y), f.scale)};
        out.exact = exact;
        out.value = {static_cast<double>(static_cast<std::int64_t>(x)) / static_cast<double>(f.scale),
                     static_cast<double>(static_cast<std::int64_t>(y)) / static_cast<double>(f.scale)};
        return out;
    }
    double x = origin.x.to_double();
    double y = origin.y.to_double();
    for (int d = 0; d < 10; ++d) {
        x += static_cast<double>(counts[d]) * map.xs()[d];
        y += static_cast<double>(counts[d]) * map.ys()[d];
    }
    out.value = {x, y};
    return out;
}

WalkPath build_walk(std::span<const Digit> digits, const VectorMap& map, const QVec2& origin, bool terminated)
{
    check_digits(digits);
    const kernels::KernelTable& k = kernels::active();
    const std::size_t n = digits.size();

    WalkPath path;
    path.mode = map.mode();
    path.origin = origin;
    path.digits.assign(digits.begin(), digits.end());
    path.terminated = terminated;
    path.xs.resize(n + 1);
    path.ys.resize(n + 1);

    // Running counts at each checkpoint, block by block.
    DigitCounts running{};
    for (std::size_t start = 0; start < n; start += checkpoint_interval) {
        const std::size_t len = std::min(checkpoint_interval, n - start);
        running = add_counts(running, k.count_digits(digits.subspan(start, len)));
        path.checkpoints.push_back({start + len, running});
    }
    if (path.checkpoints.empty()) path.checkpoints.push_back({0, running});

    if (map.is_exact()) {
        const ExactFrame f = exact_frame(map, origin);
        path.scale = f.scale;
        path.xn.resize(n + 1);
        path.yn.resize(n + 1);
        path.xn[0] = f.ox;
        path.yn[0] = f.oy;
        k.gather_i64(digits, f.xn.data(), path.xn.data() + 1);
        k.gather_i64(digits, f.yn.data(), path.yn.data() + 1);
        std::int64_t max_x = 0;
        std::int64_t max_y = 0;
        for (int d = 0; d < 10; ++d) {
            max_x = std::max(max_x, magnitude(f.xn[d]));
            max_y = std::max(max_y, magnitude(f.yn[d]));
        }
        scan_exact(path.xn, f.ox, max_x);
        scan_exact(path.yn, f.oy, max_y);
        const auto scale = static_cast<double>(f.scale);
        for (std::size_t i = 0; i <= n; ++i) {
            path.xs[i] = static_cast<double>(path.xn[i]) / scale;
            path.ys[i] = static_cast<double>(path.yn[i]) / scale;
        }
        return path;
    }

    path.xs[0] = origin.x.to_double();
    path.ys[0] = origin.y.to_double();
    k.gather_f64(digits, map.xs().data(), path.xs.data() + 1);
    k.gather_f64(digits, map.ys().data(), path.ys.data() + 1);
    // Sequential accumulation keeps the rounding order ISA-independent.
    std::size_t next_checkpoint = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i == path.checkpoints[next_checkpoint].step) {
            const Vec2 p = position_from_counts(path.checkpoints[next_checkpoint].counts, map, origin).value;
            path.xs[i] = p.x;
            path.ys[i] = p.y;
            ++next_checkpoint;
            continue;
        }
        path.xs[i] += path.xs[i - 1];
        path.ys[i] += path.ys[i - 1];
    }
    return path;
}

}  // namespace huella
