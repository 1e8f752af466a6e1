#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "minterp/instance_io.hpp"
#include "minterp/interp_params.hpp"
#include "minterp/types.hpp"

namespace minterp {

/// theta in {0.25, 0.5, 0.75} crossed with q in {1, 2, inf}.
std::vector<InterpParams> default_param_grid();

/// Dyadic scale grid {1/4, 1/2, 1, 2, 4}.
std::vector<double> default_t_grid();

struct SuiteOptions {
    std::string suite = "all"; // metric-axioms | lemma-inequalities | separator |
                               // interpolation-theorem | fixed-point | oracle-equivalence | all
    int random_count = 0;
    std::uint64_t seed = 0;
    double tol = kDefaultTol;
    int threads = 1;
    std::optional<std::string> input_path; // instance (or operator, for the operator suites) file
};

struct CaseResult {
    std::string id;
    bool pass = true;
    nlohmann::json witness; // null when passing; minimal replay data when not
    nlohmann::json info;    // optional pass-side facts (e.g. the fixed point found)
};

struct SuiteResult {
    std::string name;
    std::vector<CaseResult> cases;
    nlohmann::json notes; // measured, non-asserted quantities (e.g. p asymmetry)

    int passed() const;
    int failed() const;
};

struct RunReport {
    nlohmann::json command; // semantic echo: command, suite, seed, ... (no execution details)
    std::vector<SuiteResult> suites;
    double wall_seconds = 0.0; // text output only, never in the canonical document

    bool ok() const;
    /// Canonical JSON document; byte-identical for identical inputs and
    /// seed, independent of thread count.
    nlohmann::json to_json() const;
    std::string text() const;
};

/// Runs the requested suite(s) over randomly generated or file-given
/// inputs. Cases are independent and may run on several threads; results
/// are ordered by case id regardless of scheduling.
RunReport run_suites(const SuiteOptions& opts);

bool is_known_suite(const std::string& name);

} // namespace minterp
