#include "variants.hpp"

#include <cmath>

namespace huella::kernels::scalar {

namespace {

MinMax minmax(std::span<const double> values)
{
    MinMax out{values[0], values[0]};
    for (double v : values) {
        if (v < out.min) out.min = v;
        if (v > out.max) out.max = v;
    }
    return out;
}

DigitCounts count_digits(std::span<const std::uint8_t> digits)
{
    DigitCounts counts{};
    for (std::uint8_t d : digits) ++counts[d];
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
    std::int64_t running = init;
    for (auto& v : values) {
        running += v;
        v = running;
    }
}

std::size_t last_mismatch_i64(const LagQuery<std::int64_t>& q)
{
    for (std::size_t n = q.end; n-- > q.begin;) {
        if (q.xs[n + q.lag] - q.xs[n] != q.dx || q.ys[n + q.lag] - q.ys[n] != q.dy) return n;
    }
    return npos;
}

std::size_t last_mismatch_f64(const LagQuery<double>& q, double tolerance)
{
    for (std::size_t n = q.end; n-- > q.begin;) {
        const double ex = std::fabs((q.xs[n + q.lag] - q.xs[n]) - q.dx);
        const double ey = std::fabs((q.ys[n + q.lag] - q.ys[n]) - q.dy);
        if (!(ex <= tolerance) || !(ey <= tolerance)) return n;
    }
    return npos;
}

}  // namespace

const KernelTable table{
    Isa::scalar, minmax, count_digits, gather_i64, gather_f64, inclusive_scan_i64,
    last_mismatch_i64, last_mismatch_f64,
};

}  // namespace huella::kernels::scalar
