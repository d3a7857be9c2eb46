#pragma once

// JSON reading and writing for polylines and verdicts.
//
//   planar:    {"geometry":"planar","vertices":[[x,y],...]}
//   spherical: {"geometry":"spherical","vertices_xyz":[[x,y,z],...]}

#include <dna/hyperbolic.hpp>
#include <dna/inequalities.hpp>
#include <dna/planar.hpp>
#include <dna/spherical.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace dna {

using Json = nlohmann::json;

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidInput(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

inline std::vector<double> numbers(const Json& row, std::size_t count) {
    if (!row.is_array() || row.size() != count) {
        throw InvalidInput("vertex must be an array of " + std::to_string(count) + " numbers");
    }
    std::vector<double> out;
    for (const auto& x : row) {
        if (!x.is_number()) {
            throw InvalidInput("vertex coordinate is not a number");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

inline std::string geometry_of(const Json& j) {
    const Json& g = field(j, "geometry");
    if (!g.is_string()) {
        throw InvalidInput("\"geometry\" must be a string");
    }
    return g.get<std::string>();
}

} // namespace detail

inline ClosedPolyline2 planar_from_json(const Json& j) {
    if (detail::geometry_of(j) != "planar") {
        throw InvalidInput("expected \"geometry\": \"planar\"");
    }
    const Json& rows = detail::field(j, "vertices");
    if (!rows.is_array()) {
        throw InvalidInput("\"vertices\" must be an array");
    }
    std::vector<Point2> v;
    for (const auto& row : rows) {
        const auto xy = detail::numbers(row, 2);
        v.push_back({xy[0], xy[1]});
    }
    try {
        return ClosedPolyline2(std::move(v));
    } catch (const DegenerateInput& e) {
        throw InvalidInput(e.what());
    }
}

inline SphPolyline spherical_from_json(const Json& j) {
    if (detail::geometry_of(j) != "spherical") {
        throw InvalidInput("expected \"geometry\": \"spherical\"");
    }
    const Json& rows = detail::field(j, "vertices_xyz");
    if (!rows.is_array()) {
        throw InvalidInput("\"vertices_xyz\" must be an array");
    }
    std::vector<SphPoint> v;
    for (const auto& row : rows) {
        const auto xyz = detail::numbers(row, 3);
        const Vec3 p{xyz[0], xyz[1], xyz[2]};
        if (!(std::abs(norm(p) - 1.0) <= 1e-6)) {
            throw InvalidInput("spherical vertex is not a unit vector");
        }
        v.emplace_back(p);
    }
    try {
        return SphPolyline(std::move(v));
    } catch (const DegenerateInput& e) {
        throw InvalidInput(e.what());
    }
}

inline Json to_json(const ClosedPolyline2& p) {
    Json rows = Json::array();
    for (const auto& v : p.vertices()) {
        rows.push_back({v.x, v.y});
    }
    return {{"geometry", "planar"}, {"vertices", rows}};
}

inline Json to_json(const SphPolyline& p) {
    Json rows = Json::array();
    for (const auto& v : p.vertices()) {
        rows.push_back({v.v().x, v.v().y, v.v().z});
    }
    return {{"geometry", "spherical"}, {"vertices_xyz", rows}};
}

inline Json to_json(const DnaVerdict& v) {
    Json j{{"L", v.metrics.L}, {"V", v.metrics.V}, {"T", v.T},        {"P", v.metrics.P},
           {"T1", v.T1},       {"margin", v.margin}, {"k", nullptr}};
    if (v.multiple_circuit) {
        j["k"] = *v.multiple_circuit;
    }
    return j;
}

inline Json to_json(const SphVerdict& v) {
    return {{"L", v.L}, {"V", v.V}, {"T", v.T}, {"S", v.S}, {"P", v.P}, {"T1", v.T1}, {"margin", v.margin}};
}

inline Json to_json(const CounterexampleResult& r) {
    return {{"t", r.t},
            {"T_gamma", r.T_gamma},
            {"T_gamma1", r.T_gamma1},
            {"margin", r.margin},
            {"ratio_V", r.ratio_V},
            {"ratio_L", r.ratio_L}};
}

inline Json to_json(const InequalityMargin& m) {
    return {{"lhs", m.lhs}, {"rhs", m.rhs}, {"margin", m.margin}, {"strict", m.strict}};
}

} // namespace dna
