#include "huella/export.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "huella/format.hpp"

namespace huella {

namespace {

using Json = nlohmann::ordered_json;

const std::array<const char*, 4> overlay_palette{"#1f4e79", "#c0392b", "#27ae60", "#8e44ad"};
const std::array<const char*, 2> band_palette{"#e67e22", "#2980b9"};

// World -> pixel transform over a padded, uniformly scaled viewport.
struct Viewport {
    double min_x;
    double max_y;
    double scale;
    int width;
    int height;

    static Viewport fit(const BoundingBox& box, int width)
    {
        const double w = std::max(box.max.x - box.min.x, 0.0);
        const double h = std::max(box.max.y - box.min.y, 0.0);
        const double extent = std::max(w, h);
        // Points get a unit square; thin boxes are widened to a quarter of the long side.
        const double base = extent > 0 ? extent : 1.0;
        const double pad = 0.05 * base;
        const double span_x = std::max(w, 0.25 * base) + 2 * pad;
        const double span_y = std::max(h, 0.25 * base) + 2 * pad;
        const double cx = (box.min.x + box.max.x) / 2;
        const double cy = (box.min.y + box.max.y) / 2;
        Viewport v;
        v.width = std::max(width, 1);
        v.scale = v.width / span_x;
        v.height = std::max(1, static_cast<int>(std::lround(span_y * v.scale)));
        v.min_x = cx - span_x / 2;
        v.max_y = cy + span_y / 2;
        return v;
    }

    double px(double x) const { return std::clamp((x - min_x) * scale, 0.0, static_cast<double>(width)); }
    double py(double y) const { return std::clamp((max_y - y) * scale, 0.0, static_cast<double>(height)); }
};

std::string pixel(double v) { return format_sig(positive_zero(v)); }

std::string points_attribute(const WalkPath& path, const Viewport& view, std::size_t first, std::size_t last)
{
    std::string out;
    out.reserve((last - first + 1) * 16);
    for (std::size_t k = first; k <= last; ++k) {
        if (k != first) out.push_back(' ');
        out += pixel(view.px(path.xs[k]));
        out.push_back(',');
        out += pixel(view.py(path.ys[k]));
    }
    return out;
}

std::string escape_xml(const std::string& text)
{
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

std::string svg_header(const Viewport& view)
{
    const std::string w = std::to_string(view.width);
    const std::string h = std::to_string(view.height);
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
           "\" viewBox=\"0 0 " + w + " " + h + "\">\n"
           "<rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"white\"/>\n";
}

std::string band_paths(const ExportBundle& bundle, const Viewport& view, const SvgOptions& options)
{
    const auto* periodic = std::get_if<Periodic>(&bundle.classification);
    if (!options.banding || !periodic || periodic->lag == 0) return {};
    const WalkPath& path = bundle.path;
    std::string out;
    std::size_t block = 0;
    for (std::size_t first = periodic->preperiod; first < path.steps() && block < max_band_blocks;
         first += periodic->lag, ++block) {
        const std::size_t last = std::min(first + periodic->lag, path.steps());
        out += "<path class=\"band\" fill=\"none\" stroke=\"";
        out += band_palette[block % band_palette.size()];
        out += "\" stroke-width=\"" + format_sig(options.stroke_width * 2) + "\" stroke-opacity=\"0.35\" d=\"M";
        for (std::size_t k = first; k <= last; ++k) {
            out += k == first ? " " : " L ";
            out += pixel(view.px(path.xs[k])) + " " + pixel(view.py(path.ys[k]));
        }
        out += "\"/>\n";
    }
    return out;
}

std::string origin_marker(const WalkPath& path, const Viewport& view)
{
    return "<circle class=\"origin\" cx=\"" + pixel(view.px(path.xs[0])) + "\" cy=\"" + pixel(view.py(path.ys[0])) +
           "\" r=\"3\" fill=\"black\"/>\n";
}

BoundingBox union_box(std::span<const ExportBundle> bundles)
{
    BoundingBox box = bounding_box(bundles[0].path);
    for (const auto& b : bundles.subspan(1)) {
        const BoundingBox other = bounding_box(b.path);
        box.min = {std::min(box.min.x, other.min.x), std::min(box.min.y, other.min.y)};
        box.max = {std::max(box.max.x, other.max.x), std::max(box.max.y, other.max.y)};
    }
    return box;
}

std::string drift_text(const Drift& drift)
{
    if (drift.exact) return "(" + format_sig(drift.exact->x) + "," + format_sig(drift.exact->y) + ")";
    return "(" + format_sig(drift.value.x) + "," + format_sig(drift.value.y) + ")";
}

Json pair(double x, double y) { return Json::array({positive_zero(x), positive_zero(y)}); }

Json drift_report_json(const DriftReport& r)
{
    Json j;
    j["lag"] = r.lag;
    j["start"] = r.start;
    j["drift"] = pair(r.drift.value.x, r.drift.value.y);
    j["closed"] = r.closed;
    if (r.drift.exact) j["exact_drift"] = Json::array({to_string(r.drift.exact->x), to_string(r.drift.exact->y)});
    return j;
}

}  // namespace

std::string format_x(const WalkPath& path, std::size_t k)
{
    return path.mode == CoordMode::exact ? format_sig(path.xn[k], path.scale) : format_sig(path.xs[k]);
}

std::string format_y(const WalkPath& path, std::size_t k)
{
    return path.mode == CoordMode::exact ? format_sig(path.yn[k], path.scale) : format_sig(path.ys[k]);
}

std::string kind_name(const WalkClass& classification)
{
    if (std::holds_alternative<Terminating>(classification)) return "terminating";
    if (std::holds_alternative<Periodic>(classification)) return "periodic";
    return "no_period_found";
}

std::string describe(const WalkClass& classification)
{
    if (const auto* t = std::get_if<Terminating>(&classification))
        return "terminating after " + std::to_string(t->steps) + " steps";
    if (const auto* p = std::get_if<Periodic>(&classification)) {
        std::string out = "periodic lag=" + std::to_string(p->lag) + " drift=" + drift_text(p->drift.drift);
        if (p->drift.closed) out += " closed";
        return out;
    }
    const auto& none = std::get<NoPeriodFound>(classification);
    std::string out = "no period found (horizon=" + std::to_string(none.horizon) +
                      ", max_lag=" + std::to_string(none.max_lag);
    if (none.inconclusive) out += ", inconclusive";
    return out + ")";
}

std::string to_svg(const ExportBundle& bundle, const SvgOptions& options)
{
    const WalkPath& path = bundle.path;
    if (path.size() == 0) throw std::invalid_argument("cannot draw an empty path");
    const Viewport view = Viewport::fit(bounding_box(path), options.width);
    std::string out = svg_header(view);
    out += "<title>" + escape_xml(bundle.spec) + " - " + escape_xml(describe(bundle.classification)) + "</title>\n";
    out += band_paths(bundle, view, options);
    out += "<polyline class=\"huella\" fill=\"none\" stroke=\"" + escape_xml(options.stroke) + "\" stroke-width=\"" +
           format_sig(options.stroke_width) + "\" stroke-linejoin=\"round\" points=\"" +
           points_attribute(path, view, 0, path.size() - 1) + "\"/>\n";
    out += origin_marker(path, view);
    out += "</svg>\n";
    return out;
}

std::string to_svg_overlay(std::span<const ExportBundle> bundles, const SvgOptions& options)
{
    if (bundles.empty()) throw std::invalid_argument("nothing to compare");
    for (const auto& b : bundles) {
        if (b.path.size() == 0) throw std::invalid_argument("cannot draw an empty path");
    }
    const Viewport view = Viewport::fit(union_box(bundles), options.width);
    std::string out = svg_header(view);
    for (std::size_t i = 0; i < bundles.size(); ++i) {
        const char* color = overlay_palette[i % overlay_palette.size()];
        out += band_paths(bundles[i], view, options);
        out += "<polyline class=\"huella\" fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"" +
               format_sig(options.stroke_width) + "\" stroke-linejoin=\"round\" points=\"" +
               points_attribute(bundles[i].path, view, 0, bundles[i].path.size() - 1) + "\"/>\n";
    }
    out += origin_marker(bundles[0].path, view);
    out += "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t i = 0; i < bundles.size(); ++i) {
        const std::string y = std::to_string(18 + 16 * i);
        out += "<rect x=\"8\" y=\"" + std::to_string(8 + 16 * i) + "\" width=\"12\" height=\"12\" fill=\"" +
               overlay_palette[i % overlay_palette.size()] + "\"/>";
        out += "<text x=\"26\" y=\"" + y + "\">" + escape_xml(bundles[i].spec) + ": " +
               escape_xml(describe(bundles[i].classification)) + "</text>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

std::string to_csv(const ExportBundle& bundle)
{
    const WalkPath& path = bundle.path;
    std::string out = "step,digit,x,y\r\n";
    for (std::size_t k = 0; k < path.size(); ++k) {
        out += std::to_string(k);
        out.push_back(',');
        if (k > 0) out.push_back(static_cast<char>('0' + path.digits[k - 1]));
        out.push_back(',');
        out += format_x(path, k);
        out.push_back(',');
        out += format_y(path, k);
        out += "\r\n";
    }
    return out;
}

std::string to_geogebra(const ExportBundle& bundle)
{
    const WalkPath& path = bundle.path;
    if (path.digits.empty()) throw std::invalid_argument("GeoGebra export needs at least one digit");
    std::string out = "cifras={";
    for (std::size_t i = 0; i < path.digits.size(); ++i) {
        if (i) out.push_back(',');
        out.push_back(static_cast<char>('0' + path.digits[i]));
    }
    out += "}\npuntos={";
    for (std::size_t k = 0; k < path.size(); ++k) {
        if (k) out.push_back(',');
        out += "(" + format_x(path, k) + "," + format_y(path, k) + ")";
    }
    out += "}\nhuella=Polyline(puntos)\n";
    return out;
}

Json period_json(const PeriodInfo& info)
{
    Json j;
    j["preperiod"] = info.preperiod;
    j["period_len"] = info.period_len;
    j["preperiod_digits"] = digits_to_string(info.preperiod_digits);
    j["period"] = digits_to_string(info.period_digits);
    return j;
}

Json classification_json(const WalkClass& classification)
{
    Json j;
    j["kind"] = kind_name(classification);
    if (const auto* t = std::get_if<Terminating>(&classification)) {
        j["steps"] = t->steps;
    } else if (const auto* p = std::get_if<Periodic>(&classification)) {
        j["preperiod"] = p->preperiod;
        j["lag"] = p->lag;
        j["drift"] = pair(p->drift.drift.value.x, p->drift.drift.value.y);
        j["closed"] = p->drift.closed;
        if (p->drift.drift.exact)
            j["exact_drift"] = Json::array({to_string(p->drift.drift.exact->x), to_string(p->drift.drift.exact->y)});
        j["geometric"] = p->geometric ? drift_report_json(*p->geometric) : Json(nullptr);
    } else {
        const auto& none = std::get<NoPeriodFound>(classification);
        j["horizon"] = none.horizon;
        j["max_lag"] = none.max_lag;
        if (none.inconclusive) j["inconclusive"] = true;
    }
    return j;
}

Json to_json_value(const ExportBundle& bundle)
{
    const WalkPath& path = bundle.path;
    Json j;
    j["spec"] = bundle.spec;

    Json map;
    map["name"] = bundle.map.name();
    map["mode"] = std::string(to_string(bundle.map.mode()));
    Json vectors = Json::array();
    for (Digit d = 0; d < 10; ++d) vectors.push_back(pair(bundle.map.xs()[d], bundle.map.ys()[d]));
    map["vectors"] = vectors;
    if (bundle.map.is_exact()) {
        Json exact = Json::array();
        for (Digit d = 0; d < 10; ++d)
            exact.push_back(Json::array({to_string(bundle.map.exact_vector(d).x), to_string(bundle.map.exact_vector(d).y)}));
        map["exact_vectors"] = exact;
    }
    j["map"] = map;

    j["origin"] = pair(path.xs[0], path.ys[0]);
    Json digits = Json::array();
    for (Digit d : path.digits) digits.push_back(d);
    j["digits"] = digits;
    j["terminated"] = path.terminated;
    Json points = Json::array();
    for (std::size_t k = 0; k < path.size(); ++k) points.push_back(pair(path.xs[k], path.ys[k]));
    j["points"] = points;
    j["classification"] = classification_json(bundle.classification);
    if (bundle.period) j["period"] = period_json(*bundle.period);
    const BoundingBox box = bounding_box(path);
    j["bounding_box"] = {{"min", pair(box.min.x, box.min.y)}, {"max", pair(box.max.x, box.max.y)}};
    return j;
}

std::string to_json(const ExportBundle& bundle) { return to_json_value(bundle).dump(); }

}  // namespace huella
