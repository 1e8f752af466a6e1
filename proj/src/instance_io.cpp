#include "minterp/instance_io.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace minterp {

namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& j, const char* field) {
    if (!j.contains(field) || !j.at(field).is_array())
        throw StructuralError(std::string("instance: missing or non-array field '") + field + "'");
    std::vector<std::string> out;
    for (const auto& e : j.at(field)) {
        if (!e.is_string()) throw StructuralError(std::string("instance: '") + field + "' must hold strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

std::vector<std::vector<double>> matrix(const json& j, const char* field, std::size_t n) {
    if (!j.contains(field) || !j.at(field).is_array())
        throw StructuralError(std::string("instance: missing or non-array field '") + field + "'");
    const auto& rows = j.at(field);
    if (rows.size() != n)
        throw StructuralError(std::string("instance: '") + field + "' must have one row per label");
    std::vector<std::vector<double>> out;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n)
            throw StructuralError(std::string("instance: '") + field + "' is not square");
        std::vector<double> r;
        for (const auto& e : row) {
            if (!e.is_number()) throw StructuralError(std::string("instance: '") + field + "' holds a non-number");
            r.push_back(e.get<double>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw StructuralError("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

} // namespace

CompatiblePair Instance::to_pair() const {
    return CompatiblePair(points, x0, x1, d0_matrix(), d1_matrix(), dx_matrix(), c0, c1);
}

nlohmann::json Instance::to_json() const {
    json j;
    j["points"] = points;
    j["X0"] = x0;
    j["X1"] = x1;
    j["d0"] = d0;
    j["d1"] = d1;
    j["dX"] = dx;
    j["C0"] = c0;
    j["C1"] = c1;
    return j;
}

Instance Instance::from_json(const nlohmann::json& j) {
    Instance inst;
    inst.points = string_list(j, "points");
    inst.x0 = string_list(j, "X0");
    inst.x1 = string_list(j, "X1");
    inst.d0 = matrix(j, "d0", inst.x0.size());
    inst.d1 = matrix(j, "d1", inst.x1.size());
    inst.dx = matrix(j, "dX", inst.points.size());
    if (j.contains("C0")) inst.c0 = j.at("C0").get<double>();
    if (j.contains("C1")) inst.c1 = j.at("C1").get<double>();
    return inst;
}

std::string Instance::digest() const { return fnv1a64_hex(to_json().dump()); }

Instance load_instance(const std::string& path) { return Instance::from_json(read_json_file(path)); }

OperatorTable load_operator(const std::string& path) {
    const json j = read_json_file(path);
    const auto base = std::filesystem::path(path).parent_path();
    const auto load_side = [&](const char* field) {
        if (!j.contains(field)) throw StructuralError(std::string("operator: missing field '") + field + "'");
        const auto& side = j.at(field);
        if (side.is_string())
            return Instance::from_json(read_json_file((base / side.get<std::string>()).string()));
        if (side.is_object()) return Instance::from_json(side);
        throw StructuralError(std::string("operator: '") + field + "' must be a path or an inline instance");
    };
    const Instance dom = load_side("domain");
    const Instance cod = load_side("codomain");
    if (!j.contains("map") || !j.at("map").is_object())
        throw StructuralError("operator: missing or non-object field 'map'");
    PointMap map;
    for (const auto& [k, v] : j.at("map").items()) {
        if (!v.is_string()) throw StructuralError("operator: map values must be labels");
        map[k] = v.get<std::string>();
    }
    return OperatorTable(dom.to_pair(), cod.to_pair(), std::move(map));
}

bool is_operator_json(const std::string& path) {
    const json j = read_json_file(path);
    return j.is_object() && j.contains("map");
}

std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

} // namespace minterp
