#pragma once

// Data-parallel inner loops behind the walk and analysis code.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, AVX2 (x86-64) or NEON (AArch64) variants. The active variant is
// chosen once at startup from CPU features; HUELLA_ISA=scalar|avx2|neon in the
// environment overrides it. All variants return bit-identical results.

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>

namespace huella::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view name(Isa isa);

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct MinMax {
    double min;
    double max;
};

using DigitCounts = std::array<std::uint64_t, 10>;

/// Lag-translation query: does (x[n + lag] - x[n], y[n + lag] - y[n]) equal
/// (dx, dy) for n in [begin, end)? Callers guarantee end + lag <= size.
template <typename T>
struct LagQuery {
    const T* xs;
    const T* ys;
    std::size_t lag;
    std::size_t begin;
    std::size_t end;
    T dx;
    T dy;
};

struct KernelTable {
    Isa isa;
    /// Requires a non-empty input.
    MinMax (*minmax)(std::span<const double> values);
    DigitCounts (*count_digits)(std::span<const std::uint8_t> digits);
    /// out[k] = table[digits[k]]; digits must be < 10.
    void (*gather_i64)(std::span<const std::uint8_t> digits, const std::int64_t* table, std::int64_t* out);
    void (*gather_f64)(std::span<const std::uint8_t> digits, const double* table, double* out);
    /// In-place inclusive scan seeded with init; callers rule out overflow.
    void (*inclusive_scan_i64)(std::span<std::int64_t> values, std::int64_t init);
    /// Largest n in [begin, end) whose lag difference differs from (dx, dy), or npos.
    std::size_t (*last_mismatch_i64)(const LagQuery<std::int64_t>& query);
    /// Same with |difference - d| <= tolerance per coordinate counted as a match.
    std::size_t (*last_mismatch_f64)(const LagQuery<double>& query, double tolerance);
};

/// The table used by the library.
const KernelTable& active();

/// Variants compiled into this binary and supported by the running CPU.
std::span<const KernelTable* const> available();

const KernelTable& scalar_table();

/// Replaces the active table; intended for tests and benchmarks. Returns false
/// when the requested ISA is unavailable.
bool select(Isa isa);

}  // namespace huella::kernels
