#include "variants.hpp"

#include <arm_neon.h>

#include <cmath>

namespace huella::kernels::neon {

namespace {

MinMax minmax(std::span<const double> values)
{
    const std::size_t n = values.size();
    const double* p = values.data();
    MinMax out{p[0], p[0]};
    std::size_t i = 0;
    if (n >= 2) {
        float64x2_t lo = vld1q_f64(p);
        float64x2_t hi = lo;
        for (i = 2; i + 2 <= n; i += 2) {
            const float64x2_t v = vld1q_f64(p + i);
            lo = vminq_f64(lo, v);
            hi = vmaxq_f64(hi, v);
        }
        const double lanes_lo[2] = {vgetq_lane_f64(lo, 0), vgetq_lane_f64(lo, 1)};
        const double lanes_hi[2] = {vgetq_lane_f64(hi, 0), vgetq_lane_f64(hi, 1)};
        for (int k = 0; k < 2; ++k) {
            if (lanes_lo[k] < out.min) out.min = lanes_lo[k];
            if (lanes_hi[k] > out.max) out.max = lanes_hi[k];
        }
    }
    for (; i < n; ++i) {
        if (p[i] < out.min) out.min = p[i];
        if (p[i] > out.max) out.max = p[i];
    }
    return out;
}

DigitCounts count_digits(std::span<const std::uint8_t> digits)
{
    DigitCounts counts{};
    const std::size_t n = digits.size();
    const std::uint8_t* p = digits.data();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const uint8x16_t block = vld1q_u8(p + i);
        for (int d = 0; d < 10; ++d) {
            // Equal lanes are 0xFF; shifting right by 7 leaves 1 per match.
            const uint8x16_t eq = vshrq_n_u8(vceqq_u8(block, vdupq_n_u8(static_cast<std::uint8_t>(d))), 7);
            counts[d] += vaddvq_u8(eq);
        }
    }
    for (; i < n; ++i) ++counts[p[i]];
    return counts;
}

void gather_i64(std::span<const std::uint8_t> digits, const std::int64_t* table, std::int64_t* out)
{
    for (std::size_t k = 0; k < digits.size(); ++k) out[k] = table[digits[k]];
}

void gather_f64(std::span<const std::uint8_t> digits, const double* table, double* out)
{
    for (std::size_t k = 0; k < digits.size(); ++k) out[k] = table[digits[k]];
}

void inclusive_scan_i64(std::span<std::int64_t> values, std::int64_t init)
{
    const std::size_t n = values.size();
    std::int64_t* p = values.data();
    int64x2_t carry = vdupq_n_s64(init);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        int64x2_t x = vld1q_s64(p + i);
        // [x0, x0 + x1]
        x = vaddq_s64(x, vextq_s64(vdupq_n_s64(0), x, 1));
        x = vaddq_s64(x, carry);
        vst1q_s64(p + i, x);
        carry = vdupq_laneq_s64(x, 1);
    }
    std::int64_t running = i > 0 ? p[i - 1] : init;
    for (; i < n; ++i) {
        running += p[i];
        p[i] = running;
    }
}

std::size_t last_mismatch_i64(const LagQuery<std::int64_t>& q)
{
    const int64x2_t dx = vdupq_n_s64(q.dx);
    const int64x2_t dy = vdupq_n_s64(q.dy);
    std::size_t n = q.end;
    while (n >= q.begin + 2) {
        const std::size_t k = n - 2;
        const int64x2_t ddx = vsubq_s64(vld1q_s64(q.xs + k + q.lag), vld1q_s64(q.xs + k));
        const int64x2_t ddy = vsubq_s64(vld1q_s64(q.ys + k + q.lag), vld1q_s64(q.ys + k));
        const uint64x2_t ok = vandq_u64(vceqq_s64(ddx, dx), vceqq_s64(ddy, dy));
        if (vgetq_lane_u64(ok, 1) == 0) return k + 1;
        if (vgetq_lane_u64(ok, 0) == 0) return k;
        n = k;
    }
    while (n-- > q.begin) {
        if (q.xs[n + q.lag] - q.xs[n] != q.dx || q.ys[n + q.lag] - q.ys[n] != q.dy) return n;
    }
    return npos;
}

std::size_t last_mismatch_f64(const LagQuery<double>& q, double tolerance)
{
    const float64x2_t dx = vdupq_n_f64(q.dx);
    const float64x2_t dy = vdupq_n_f64(q.dy);
    const float64x2_t tol = vdupq_n_f64(tolerance);
    std::size_t n = q.end;
    while (n >= q.begin + 2) {
        const std::size_t k = n - 2;
        const float64x2_t ex =
            vabsq_f64(vsubq_f64(vsubq_f64(vld1q_f64(q.xs + k + q.lag), vld1q_f64(q.xs + k)), dx));
        const float64x2_t ey =
            vabsq_f64(vsubq_f64(vsubq_f64(vld1q_f64(q.ys + k + q.lag), vld1q_f64(q.ys + k)), dy));
        const uint64x2_t ok = vandq_u64(vcleq_f64(ex, tol), vcleq_f64(ey, tol));
        if (vgetq_lane_u64(ok, 1) == 0) return k + 1;
        if (vgetq_lane_u64(ok, 0) == 0) return k;
        n = k;
    }
    while (n-- > q.begin) {
        const double ex = std::fabs((q.xs[n + q.lag] - q.xs[n]) - q.dx);
        const double ey = std::fabs((q.ys[n + q.lag] - q.ys[n]) - q.dy);
        if (!(ex <= tolerance) || !(ey <= tolerance)) return n;
    }
    return npos;
}

}  // namespace

const KernelTable table{
    Isa::neon, minmax, count_digits, gather_i64, gather_f64, inclusive_scan_i64,
    last_mismatch_i64, last_mismatch_f64,
};

}  // namespace huella::kernels::neon
