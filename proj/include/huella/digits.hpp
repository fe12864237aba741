#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include "huella/numexpr.hpp"

namespace huella {

inline constexpr std::size_t default_max_digits = 1'000'000;

/// A request would push a stream past its digit cap.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::size_t cap);
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

struct StreamOptions {
    std::size_t max_digits = default_max_digits;
    /// Continue terminating expansions with zeros instead of stopping.
    bool pad_zeros = false;
};

struct TakeResult {
    DigitSeq digits;
    /// The expansion ended; no further digits will be produced.
    bool terminated = false;
};

/// Resumable generator of the fractional decimal digits of |value|.
///
/// Streams are deterministic and prefix-stable: taking n digits and then m
/// more yields the same sequence as taking n + m at once.
class DigitStream {
public:
    explicit DigitStream(NumberSpec spec, StreamOptions options = {});

    TakeResult take(std::size_t n);

    const NumberSpec& spec() const noexcept { return spec_; }
    std::size_t emitted() const noexcept { return emitted_; }
    bool terminated() const noexcept;
    const StreamOptions& options() const noexcept { return options_; }

private:
    // Long division with a machine-word remainder when the denominator allows.
    struct SmallDivision {
        std::uint64_t remainder;
        std::uint64_t denominator;
    };
    struct BigDivision {
        BigInt remainder;
        BigInt denominator;
    };
    // floor(sqrt(k * 10^(2m))) for the m digits emitted so far.
    struct RootState {
        BigInt radicand;
        BigInt root;
    };
    // Digits confirmed so far; extended by recomputation at higher precision.
    struct ConstantState {
        bool is_pi;
        std::string confirmed;
    };
    struct LiteralState {
        std::size_t cursor = 0;
    };
    using State = std::variant<SmallDivision, BigDivision, RootState, ConstantState, LiteralState>;

    void produce(std::size_t n, TakeResult& out);

    NumberSpec spec_;
    StreamOptions options_;
    std::size_t emitted_ = 0;
    State state_;
};

DigitStream digit_stream(const NumberSpec& spec, StreamOptions options = {});
TakeResult take_digits(DigitStream& stream, std::size_t n);

/// Arithmetic structure of a rational's expansion.
struct PeriodInfo {
    std::size_t preperiod = 0;
    /// 0 means the expansion terminates.
    std::size_t period_len = 0;
    DigitSeq preperiod_digits;
    DigitSeq period_digits;

    bool terminating() const noexcept { return period_len == 0; }
    bool operator==(const PeriodInfo&) const = default;
};

/// Preperiod from the 2/5 exponents of the denominator, period length from
/// the multiplicative order of 10 modulo the rest. Throws BudgetExceeded when
/// preperiod + period_len exceeds max_digits.
PeriodInfo rational_period(const Rational& r, std::size_t max_digits = default_max_digits);

/// Reference computation: long division until a remainder repeats.
PeriodInfo remainder_cycle_period(const Rational& r, std::size_t max_digits = default_max_digits);

std::string digits_to_string(const DigitSeq& digits);

}  // namespace huella
