#include "variants.hpp"

#include <immintrin.h>

#include <bit>
#include <cmath>

namespace huella::kernels::avx2 {

namespace {

MinMax minmax(std::span<const double> values)
{
    const std::size_t n = values.size();
    const double* p = values.data();
    MinMax out{p[0], p[0]};
    std::size_t i = 0;
    if (n >= 4) {
        __m256d lo = _mm256_loadu_pd(p);
        __m256d hi = lo;
        for (i = 4; i + 4 <= n; i += 4) {
            const __m256d v = _mm256_loadu_pd(p + i);
            lo = _mm256_min_pd(lo, v);
            hi = _mm256_max_pd(hi, v);
        }
        alignas(32) double lanes_lo[4];
        alignas(32) double lanes_hi[4];
        _mm256_store_pd(lanes_lo, lo);
        _mm256_store_pd(lanes_hi, hi);
        for (int k = 0; k < 4; ++k) {
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
    for (; i + 32 <= n; i += 32) {
        const __m256i block = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
        for (int d = 0; d < 10; ++d) {
            const __m256i eq = _mm256_cmpeq_epi8(block, _mm256_set1_epi8(static_cast<char>(d)));
            counts[d] += static_cast<std::uint64_t>(
                std::popcount(static_cast<std::uint32_t>(_mm256_movemask_epi8(eq))));
        }
    }
    for (; i < n; ++i) ++counts[p[i]];
    return counts;
}

void gather_i64(std::span<const std::uint8_t> digits, const std::int64_t* table, std::int64_t* out)
{
    const std::size_t n = digits.size();
    const std::uint8_t* p = digits.data();
    const auto* base = reinterpret_cast<const long long*>(table);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        std::uint32_t packed;
        __builtin_memcpy(&packed, p + i, 4);
        const __m128i idx = _mm_cvtepu8_epi32(_mm_cvtsi32_si128(static_cast<int>(packed)));
        const __m256i v = _mm256_i32gather_epi64(base, idx, 8);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
    }
    for (; i < n; ++i) out[i] = table[p[i]];
}

void gather_f64(std::span<const std::uint8_t> digits, const double* table, double* out)
{
    const std::size_t n = digits.size();
    const std::uint8_t* p = digits.data();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        std::uint32_t packed;
        __builtin_memcpy(&packed, p + i, 4);
        const __m128i idx = _mm_cvtepu8_epi32(_mm_cvtsi32_si128(static_cast<int>(packed)));
        const __m256d v = _mm256_i32gather_pd(table, idx, 8);
        _mm256_storeu_pd(out + i, v);
    }
    for (; i < n; ++i) out[i] = table[p[i]];
}

void inclusive_scan_i64(std::span<std::int64_t> values, std::int64_t init)
{
    const std::size_t n = values.size();
    std::int64_t* p = values.data();
    __m256i carry = _mm256_set1_epi64x(init);
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
        // Shift by one lane: [0, x0, x1, x2].
        __m256i t = _mm256_permute4x64_epi64(x, _MM_SHUFFLE(2, 1, 0, 0));
        t = _mm256_blend_epi32(t, zero, 0x03);
        x = _mm256_add_epi64(x, t);
        // Shift by two lanes: [0, 0, x0, x1].
        t = _mm256_permute4x64_epi64(x, _MM_SHUFFLE(1, 0, 0, 0));
        t = _mm256_blend_epi32(t, zero, 0x0F);
        x = _mm256_add_epi64(x, t);
        x = _mm256_add_epi64(x, carry);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(p + i), x);
        carry = _mm256_permute4x64_epi64(x, _MM_SHUFFLE(3, 3, 3, 3));
    }
    std::int64_t running = i > 0 ? p[i - 1] : init;
    for (; i < n; ++i) {
        running += p[i];
        p[i] = running;
    }
}

std::size_t last_mismatch_i64(const LagQuery<std::int64_t>& q)
{
    const __m256i dx = _mm256_set1_epi64x(q.dx);
    const __m256i dy = _mm256_set1_epi64x(q.dy);
    std::size_t n = q.end;
    while (n >= q.begin + 4) {
        const std::size_t k = n - 4;
        const __m256i ax = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(q.xs + k));
        const __m256i bx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(q.xs + k + q.lag));
        const __m256i ay = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(q.ys + k));
        const __m256i by = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(q.ys + k + q.lag));
        const __m256i ok = _mm256_and_si256(_mm256_cmpeq_epi64(_mm256_sub_epi64(bx, ax), dx),
                                            _mm256_cmpeq_epi64(_mm256_sub_epi64(by, ay), dy));
        const unsigned mask = static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(ok)));
        if (mask != 0xF) {
            const unsigned bad = ~mask & 0xF;
            return k + static_cast<std::size_t>(31 - std::countl_zero(bad));
        }
        n = k;
    }
    while (n-- > q.begin) {
        if (q.xs[n + q.lag] - q.xs[n] != q.dx || q.ys[n + q.lag] - q.ys[n] != q.dy) return n;
    }
    return npos;
}

std::size_t last_mismatch_f64(const LagQuery<double>& q, double tolerance)
{
    const __m256d dx = _mm256_set1_pd(q.dx);
    const __m256d dy = _mm256_set1_pd(q.dy);
    const __m256d tol = _mm256_set1_pd(tolerance);
    const __m256d sign = _mm256_set1_pd(-0.0);
    std::size_t n = q.end;
    while (n >= q.begin + 4) {
        const std::size_t k = n - 4;
        const __m256d ex = _mm256_andnot_pd(
            sign, _mm256_sub_pd(_mm256_sub_pd(_mm256_loadu_pd(q.xs + k + q.lag), _mm256_loadu_pd(q.xs + k)), dx));
        const __m256d ey = _mm256_andnot_pd(
            sign, _mm256_sub_pd(_mm256_sub_pd(_mm256_loadu_pd(q.ys + k + q.lag), _mm256_loadu_pd(q.ys + k)), dy));
        const __m256d ok = _mm256_and_pd(_mm256_cmp_pd(ex, tol, _CMP_LE_OQ), _mm256_cmp_pd(ey, tol, _CMP_LE_OQ));
        const unsigned mask = static_cast<unsigned>(_mm256_movemask_pd(ok));
        if (mask != 0xF) {
            const unsigned bad = ~mask & 0xF;
            return k + static_cast<std::size_t>(31 - std::countl_zero(bad));
        }
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
    Isa::avx2, minmax, count_digits, gather_i64, gather_f64, inclusive_scan_i64,
    last_mismatch_i64, last_mismatch_f64,
};

}  // namespace huella::kernels::avx2
