#pragma once

// number text -> digits -> walk -> classification, shared by the CLI and the
// HTTP service.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "huella/export.hpp"

namespace huella {

struct WalkSettings {
    std::string number;
    std::size_t n = 500;
    /// Defaults to default_max_lag(n).
    std::optional<std::size_t> max_lag;
    QVec2 origin;
    bool include_integer_part = false;
    bool pad_zeros = false;
};

struct Limits {
    std::size_t max_digits = default_max_digits;
    std::uint64_t step_budget = unlimited_steps;
};

/// min(n / 3, 2000), at least 1.
std::size_t default_max_lag(std::size_t n);

/// Throws ParseError, BudgetExceeded, MapError, ConsistencyError.
ExportBundle run_walk(const WalkSettings& settings, const VectorMap& map, const Limits& limits = {});

/// "x,y" with each coordinate as accepted by parse_q64.
QVec2 parse_origin(std::string_view text);

}  // namespace huella
