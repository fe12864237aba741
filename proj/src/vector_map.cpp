#include "huella/vector_map.hpp"

#include <cmath>
#include <numbers>

#include "json.hpp"

namespace huella {

std::string_view to_string(CoordMode mode)
{
    return mode == CoordMode::exact ? "exact" : "float";
}

VectorMap VectorMap::exact(std::string name, const std::array<QVec2, 10>& vectors)
{
    VectorMap map;
    map.name_ = std::move(name);
    map.mode_ = CoordMode::exact;
    map.exact_ = vectors;
    try {
        std::int64_t scale = 1;
        for (const auto& v : vectors) scale = lcm64(lcm64(scale, v.x.den), v.y.den);
        map.scale_ = scale;
        for (int d = 0; d < 10; ++d) {
            map.xn_[d] = checked_mul(vectors[d].x.num, scale / vectors[d].x.den);
            map.yn_[d] = checked_mul(vectors[d].y.num, scale / vectors[d].y.den);
            map.xs_[d] = vectors[d].x.to_double();
            map.ys_[d] = vectors[d].y.to_double();
        }
    } catch (const ExactOverflow&) {
        throw MapError("exact map coordinates overflow a common 64-bit denominator");
    }
    return map;
}

VectorMap VectorMap::floating(std::string name, const std::array<Vec2, 10>& vectors)
{
    VectorMap map;
    map.name_ = std::move(name);
    map.mode_ = CoordMode::floating;
    for (int d = 0; d < 10; ++d) {
        if (!std::isfinite(vectors[d].x) || !std::isfinite(vectors[d].y))
            throw MapError("vector for digit " + std::to_string(d) + " is not finite");
        map.xs_[d] = vectors[d].x;
        map.ys_[d] = vectors[d].y;
    }
    return map;
}

VectorMap builtin_map(std::string_view name)
{
    if (name == "decagon") {
        // v_{d+5} = -v_d exactly, and v_0 = (1, 0) without rounding residue.
        std::array<Vec2, 10> vectors;
        vectors[0] = {1.0, 0.0};
        for (int d = 1; d < 5; ++d) {
            const double angle = std::numbers::pi * d / 5.0;
            vectors[d] = {std::cos(angle), std::sin(angle)};
        }
        for (int d = 0; d < 5; ++d) vectors[d + 5] = {-vectors[d].x, -vectors[d].y};
        return VectorMap::floating("decagon", vectors);
    }
    if (name == "lattice") {
        const std::array<std::array<std::int64_t, 2>, 5> base{{{1, 0}, {2, 1}, {1, 2}, {-1, 2}, {-2, 1}}};
        std::array<QVec2, 10> vectors;
        for (int d = 0; d < 5; ++d) {
            vectors[d] = {Q64::integer(base[d][0]), Q64::integer(base[d][1])};
            vectors[d + 5] = {Q64::integer(-base[d][0]), Q64::integer(-base[d][1])};
        }
        return VectorMap::exact("lattice", vectors);
    }
    throw MapError("unknown map '" + std::string(name) + "' (builtin maps: decagon, lattice)");
}

namespace {

Q64 exact_coordinate(const nlohmann::json& value)
{
    if (value.is_number_integer()) return Q64::integer(value.get<std::int64_t>());
    if (value.is_string()) return parse_q64(value.get<std::string>());
    throw MapError("exact coordinates must be integers or \"p/q\" strings");
}

}  // namespace

VectorMap parse_map_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MapError(std::string("map is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw MapError("map must be a JSON object");

    const std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>()
                                                                              : std::string("custom");
    std::string mode = "float";
    if (doc.contains("mode")) {
        if (!doc["mode"].is_string()) throw MapError("map mode must be \"exact\" or \"float\"");
        mode = doc["mode"].get<std::string>();
    }
    if (mode != "exact" && mode != "float") throw MapError("map mode must be \"exact\" or \"float\"");

    if (!doc.contains("vectors") || !doc["vectors"].is_array() || doc["vectors"].size() != 10)
        throw MapError("map must list exactly 10 vectors");
    const auto& vectors = doc["vectors"];
    for (const auto& v : vectors) {
        if (!v.is_array() || v.size() != 2) throw MapError("each vector must be a pair [x, y]");
    }

    try {
        if (mode == "exact") {
            std::array<QVec2, 10> out;
            for (std::size_t d = 0; d < 10; ++d)
                out[d] = {exact_coordinate(vectors[d][0]), exact_coordinate(vectors[d][1])};
            return VectorMap::exact(name, out);
        }
        std::array<Vec2, 10> out;
        for (std::size_t d = 0; d < 10; ++d) {
            if (!vectors[d][0].is_number() || !vectors[d][1].is_number())
                throw MapError("float coordinates must be numbers");
            out[d] = {vectors[d][0].get<double>(), vectors[d][1].get<double>()};
        }
        return VectorMap::floating(name, out);
    } catch (const MapError&) {
        throw;
    } catch (const std::exception& e) {
        throw MapError(std::string("bad coordinate: ") + e.what());
    }
}

}  // namespace huella
