#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "minterp/compatible_pair.hpp"
#include "minterp/operators.hpp"

namespace minterp {

/// An instance file as parsed: ambient points with the full dX table,
/// the two subsets with their tables, and the compatibility constants.
/// Matrices are row-major over the respective label list's order.
struct Instance {
    std::vector<std::string> points;
    std::vector<std::string> x0, x1;
    std::vector<std::vector<double>> d0, d1, dx;
    double c0 = 1.0;
    double c1 = 1.0;

    CompatiblePair to_pair() const;
    MetricMatrix d0_matrix() const { return MetricMatrix(x0, d0); }
    MetricMatrix d1_matrix() const { return MetricMatrix(x1, d1); }
    MetricMatrix dx_matrix() const { return MetricMatrix(points, dx); }

    nlohmann::json to_json() const;
    static Instance from_json(const nlohmann::json& j);

    /// FNV-1a 64 hash of the canonical (sorted-key, compact) JSON text.
    std::string digest() const;
};

Instance load_instance(const std::string& path);

/// Operator files: {"domain": <path or inline instance>, "codomain": ...,
/// "map": {"a": "u", ...}}. Paths are resolved relative to the file.
OperatorTable load_operator(const std::string& path);

/// True when the file parses as JSON and carries a "map" field, i.e. is an
/// operator file rather than an instance.
bool is_operator_json(const std::string& path);

std::string fnv1a64_hex(const std::string& data);

} // namespace minterp
