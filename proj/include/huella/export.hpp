#pragma once

#include <optional>
#include <span>
#include <string>

#include "huella/analyze.hpp"
#include "huella/digits.hpp"
#include "huella/walk.hpp"
#include "json.hpp"

namespace huella {

/// Everything the serializers need about one huella.
struct ExportBundle {
    std::string spec;
    WalkPath path;
    WalkClass classification;
    VectorMap map;
    /// Present for rational inputs.
    std::optional<PeriodInfo> period;
};

struct SvgOptions {
    int width = 800;
    std::string stroke = "#1f4e79";
    double stroke_width = 1.5;
    /// Alternate colors per period block when the walk is periodic.
    bool banding = true;
};

/// Blocks beyond this count are drawn without banding.
inline constexpr std::size_t max_band_blocks = 2048;

std::string to_svg(const ExportBundle& bundle, const SvgOptions& options = {});

/// Several huellas over one shared viewport, with a legend.
std::string to_svg_overlay(std::span<const ExportBundle> bundles, const SvgOptions& options = {});

/// step,digit,x,y with CRLF line ends; row 0 is the origin.
std::string to_csv(const ExportBundle& bundle);

/// Three GeoGebra commands: cifras={...}, puntos={(x,y),...}, huella=Polyline(puntos).
std::string to_geogebra(const ExportBundle& bundle);

/// Bundle document served by the HTTP API.
std::string to_json(const ExportBundle& bundle);
nlohmann::ordered_json to_json_value(const ExportBundle& bundle);

nlohmann::ordered_json period_json(const PeriodInfo& info);
nlohmann::ordered_json classification_json(const WalkClass& classification);

/// One-line summary, e.g. "periodic lag=6 drift=(0,0) closed".
std::string describe(const WalkClass& classification);

/// Short kind name: "terminating", "periodic" or "no_period_found".
std::string kind_name(const WalkClass& classification);

/// Coordinate text for point k: exact rationals in exact mode, doubles otherwise.
std::string format_x(const WalkPath& path, std::size_t k);
std::string format_y(const WalkPath& path, std::size_t k);

}  // namespace huella
