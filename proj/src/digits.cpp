#include "huella/digits.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "huella/constants.hpp"
#include "huella/numtheory.hpp"

namespace huella {

namespace {

// Keeps r * 10 inside 64 bits.
constexpr std::uint64_t small_denominator_limit = (std::uint64_t{1} << 59);

BigInt power_of_ten(std::size_t p)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(p));
    return out;
}

}  // namespace

BudgetExceeded::BudgetExceeded(std::size_t cap)
    : std::runtime_error("digit budget exceeded: cap is " + std::to_string(cap) + " digits"), cap_(cap)
{
}

DigitStream::DigitStream(NumberSpec spec, StreamOptions options)
    : spec_(std::move(spec)), options_(options), state_(LiteralState{})
{
    if (const auto* r = std::get_if<Rational>(&spec_)) {
        BigInt remainder = abs(r->num) % r->den;
        if (r->den < small_denominator_limit)
            state_ = SmallDivision{remainder.get_ui(), r->den.get_ui()};
        else
            state_ = BigDivision{std::move(remainder), r->den};
    } else if (const auto* s = std::get_if<Sqrt>(&spec_)) {
        BigInt root;
        mpz_sqrt(root.get_mpz_t(), s->radicand.get_mpz_t());
        state_ = RootState{s->radicand, std::move(root)};
    } else if (std::holds_alternative<Pi>(spec_)) {
        state_ = ConstantState{true, {}};
    } else if (std::holds_alternative<E>(spec_)) {
        state_ = ConstantState{false, {}};
    }
}

bool DigitStream::terminated() const noexcept
{
    if (options_.pad_zeros) return false;
    if (const auto* s = std::get_if<SmallDivision>(&state_)) return s->remainder == 0;
    if (const auto* b = std::get_if<BigDivision>(&state_)) return b->remainder == 0;
    if (const auto* l = std::get_if<LiteralState>(&state_))
        return l->cursor >= std::get<DigitLiteral>(spec_).fractional.size();
    return false;
}

TakeResult DigitStream::take(std::size_t n)
{
    if (n > options_.max_digits || emitted_ > options_.max_digits - n)
        throw BudgetExceeded(options_.max_digits);
    TakeResult out;
    out.digits.reserve(n);
    produce(n, out);
    emitted_ += out.digits.size();
    out.terminated = terminated();
    return out;
}

void DigitStream::produce(std::size_t n, TakeResult& out)
{
    auto& digits = out.digits;
    const bool pad = options_.pad_zeros;

    if (auto* s = std::get_if<SmallDivision>(&state_)) {
        std::uint64_t r = s->remainder;
        const std::uint64_t q = s->denominator;
        for (std::size_t i = 0; i < n; ++i) {
            if (r == 0 && !pad) break;
            r *= 10;
            digits.push_back(static_cast<Digit>(r / q));
            r %= q;
        }
        s->remainder = r;
        return;
    }

    if (auto* b = std::get_if<BigDivision>(&state_)) {
        BigInt quotient;
        for (std::size_t i = 0; i < n; ++i) {
            if (b->remainder == 0 && !pad) break;
            b->remainder *= 10;
            mpz_fdiv_qr(quotient.get_mpz_t(), b->remainder.get_mpz_t(), b->remainder.get_mpz_t(),
                        b->denominator.get_mpz_t());
            digits.push_back(static_cast<Digit>(quotient.get_ui()));
        }
        return;
    }

    if (auto* root = std::get_if<RootState>(&state_)) {
        if (n == 0) return;
        // s_{m+n} = floor(sqrt(k * 10^(2(m+n)))); its last n digits are the next digits.
        const std::size_t total = emitted_ + n;
        BigInt scaled = root->radicand * power_of_ten(2 * total);
        BigInt next;
        mpz_sqrt(next.get_mpz_t(), scaled.get_mpz_t());
        const BigInt shift = power_of_ten(n);
        if (next / shift != root->root) throw std::logic_error("square-root digit state diverged");
        std::string tail = BigInt(next % shift).get_str();
        if (tail.size() < n) tail.insert(0, n - tail.size(), '0');
        for (char c : tail) digits.push_back(static_cast<Digit>(c - '0'));
        root->root = std::move(next);
        return;
    }

    if (auto* c = std::get_if<ConstantState>(&state_)) {
        const std::size_t needed = emitted_ + n;
        if (c->confirmed.size() < needed) {
            const std::size_t target =
                std::min(options_.max_digits, std::max({needed, 2 * c->confirmed.size(), std::size_t{64}}));
            std::string fresh = constants::fractional_digits(
                c->is_pi ? constants::Constant::pi : constants::Constant::e, target);
            if (fresh.compare(0, c->confirmed.size(), c->confirmed) != 0)
                throw std::logic_error("constant digits changed under recomputation");
            c->confirmed = std::move(fresh);
        }
        for (std::size_t i = emitted_; i < needed; ++i)
            digits.push_back(static_cast<Digit>(c->confirmed[i] - '0'));
        return;
    }

    auto& literal = std::get<LiteralState>(state_);
    const auto& source = std::get<DigitLiteral>(spec_).fractional;
    for (std::size_t i = 0; i < n; ++i) {
        if (literal.cursor < source.size())
            digits.push_back(source[literal.cursor++]);
        else if (pad)
            digits.push_back(0);
        else
            break;
    }
}

DigitStream digit_stream(const NumberSpec& spec, StreamOptions options)
{
    return DigitStream(spec, options);
}

TakeResult take_digits(DigitStream& stream, std::size_t n) { return stream.take(n); }

namespace {

PeriodInfo fill_digits(const Rational& r, std::size_t preperiod, std::size_t period_len,
                       std::size_t max_digits)
{
    if (preperiod > max_digits || period_len > max_digits - preperiod) throw BudgetExceeded(max_digits);
    PeriodInfo info;
    info.preperiod = preperiod;
    info.period_len = period_len;
    DigitStream stream(r, StreamOptions{max_digits, true});
    DigitSeq all = stream.take(preperiod + period_len).digits;
    info.preperiod_digits.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(preperiod));
    info.period_digits.assign(all.begin() + static_cast<std::ptrdiff_t>(preperiod), all.end());
    return info;
}

Digit digit_value(std::uint64_t d) { return static_cast<Digit>(d); }
Digit digit_value(const BigInt& d) { return static_cast<Digit>(d.get_ui()); }

// Long division recording the digit produced from each remainder; stops at
// the first repeated remainder (or a zero one).
template <typename Remainder, typename Lookup, typename Record>
PeriodInfo run_remainder_cycle(Remainder r, const Remainder& q, std::size_t max_digits, Lookup lookup,
                               Record record)
{
    DigitSeq produced;
    PeriodInfo info;
    for (std::size_t i = 0;; ++i) {
        if (i > max_digits) throw BudgetExceeded(max_digits);
        std::optional<std::size_t> first;
        if (r == 0) {
            info.preperiod = i;
        } else if ((first = lookup(r))) {
            info.preperiod = *first;
            info.period_len = i - *first;
        } else {
            record(r, i);
            r *= 10;
            const Remainder digit = r / q;
            produced.push_back(digit_value(digit));
            r = r % q;
            continue;
        }
        const auto split = produced.begin() + static_cast<std::ptrdiff_t>(info.preperiod);
        info.preperiod_digits.assign(produced.begin(), split);
        info.period_digits.assign(split, produced.end());
        return info;
    }
}

}  // namespace

PeriodInfo rational_period(const Rational& r, std::size_t max_digits)
{
    const numtheory::TenSplit split = numtheory::split_ten(r.den);
    const std::size_t preperiod = std::max(split.twos, split.fives);
    if (split.rest == 1) return fill_digits(r, preperiod, 0, max_digits);
    const auto order = numtheory::multiplicative_order(BigInt(10), split.rest, max_digits);
    if (!order) throw BudgetExceeded(max_digits);
    return fill_digits(r, preperiod, static_cast<std::size_t>(*order), max_digits);
}

PeriodInfo remainder_cycle_period(const Rational& r, std::size_t max_digits)
{
    const BigInt start = abs(r.num) % r.den;
    if (r.den < (std::uint64_t{1} << 24)) {
        const std::uint64_t q = r.den.get_ui();
        std::vector<std::int64_t> seen(q, -1);
        return run_remainder_cycle<std::uint64_t>(
            start.get_ui(), q, max_digits,
            [&](std::uint64_t rem) -> std::optional<std::size_t> {
                if (seen[rem] < 0) return std::nullopt;
                return static_cast<std::size_t>(seen[rem]);
            },
            [&](std::uint64_t rem, std::size_t i) { seen[rem] = static_cast<std::int64_t>(i); });
    }
    if (r.den < small_denominator_limit) {
        std::unordered_map<std::uint64_t, std::size_t> seen;
        return run_remainder_cycle<std::uint64_t>(
            start.get_ui(), r.den.get_ui(), max_digits,
            [&](std::uint64_t rem) -> std::optional<std::size_t> {
                auto it = seen.find(rem);
                if (it == seen.end()) return std::nullopt;
                return it->second;
            },
            [&](std::uint64_t rem, std::size_t i) { seen.emplace(rem, i); });
    }
    std::map<BigInt, std::size_t> seen;
    return run_remainder_cycle<BigInt>(
        start, r.den, max_digits,
        [&](const BigInt& rem) -> std::optional<std::size_t> {
            auto it = seen.find(rem);
            if (it == seen.end()) return std::nullopt;
            return it->second;
        },
        [&](const BigInt& rem, std::size_t i) { seen.emplace(rem, i); });
}

std::string digits_to_string(const DigitSeq& digits)
{
    std::string out;
    out.reserve(digits.size());
    for (Digit d : digits) out.push_back(static_cast<char>('0' + d));
    return out;
}

}  // namespace huella
