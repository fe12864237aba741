#include "huella/pipeline.hpp"

#include <algorithm>

namespace huella {

std::size_t default_max_lag(std::size_t n) { return std::max<std::size_t>(1, std::min<std::size_t>(n / 3, 2000)); }

ExportBundle run_walk(const WalkSettings& settings, const VectorMap& map, const Limits& limits)
{
    if (settings.n == 0) throw std::invalid_argument("digit count must be at least 1");
    if (settings.n > limits.max_digits) throw BudgetExceeded(limits.max_digits);

    const NumberSpec spec = parse_number(settings.number);
    DigitStream stream(spec, StreamOptions{limits.max_digits, settings.pad_zeros});

    DigitSeq digits;
    if (settings.include_integer_part) digits = integer_part_digits(spec);
    const std::size_t leading = digits.size();
    const TakeResult taken = stream.take(settings.n);
    digits.insert(digits.end(), taken.digits.begin(), taken.digits.end());

    ExportBundle bundle{to_string(spec), build_walk(digits, map, settings.origin, taken.terminated), WalkClass{}, map,
                        std::nullopt};

    ClassifyOptions options;
    options.max_lag = settings.max_lag.value_or(default_max_lag(settings.n));
    options.step_budget = limits.step_budget;
    options.leading_digits = leading;
    bundle.classification = classify_walk(spec, bundle.path, map, options);

    if (const auto* r = std::get_if<Rational>(&spec)) {
        try {
            bundle.period = rational_period(*r, limits.max_digits);
        } catch (const BudgetExceeded&) {
            // Period longer than the digit cap; omitted.
        }
    }
    return bundle;
}

QVec2 parse_origin(std::string_view text)
{
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("origin must be \"x,y\"");
    return {parse_q64(text.substr(0, comma)), parse_q64(text.substr(comma + 1))};
}

}  // namespace huella
