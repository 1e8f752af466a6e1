// minterp: compute and verify interpolated metrics on finite compatible
// pairs. Exit codes: 0 success, 1 invariant/validation failure, 2 input
// or usage error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "minterp/functionals.hpp"
#include "minterp/instance_io.hpp"
#include "minterp/interp_km.hpp"
#include "minterp/interp_jmprime.hpp"
#include "minterp/verify.hpp"

namespace {

using minterp::CompatiblePair;
using minterp::Instance;
using minterp::InterpParams;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

double parse_q(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity")
        return minterp::kInfiniteExponent;
    std::size_t pos = 0;
    double q = 0.0;
    try {
        q = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw minterp::DomainError("--q expects a real >= 1 or 'inf'");
    }
    if (pos != text.size()) throw minterp::DomainError("--q expects a real >= 1 or 'inf'");
    return q;
}

int window_cap_from_env() {
    if (const char* env = std::getenv("MINTERP_MAX_WINDOW")) {
        try {
            const int cap = std::stoi(env);
            if (cap > 0) return cap;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid MINTERP_MAX_WINDOW='" << env << "'\n";
    }
    return 120;
}

/// Wall-clock scope for the text output; the canonical JSON carries no
/// timing so seeded reruns stay byte-identical.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::string line() const {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        char buf[48];
        std::snprintf(buf, sizeof buf, "elapsed: %.3f s\n", secs);
        return buf;
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void emit(const std::string& text_body, const json& canonical, const std::string& format,
          const std::optional<std::string>& out_path) {
    if (format == "json")
        std::cout << canonical.dump(2) << "\n";
    else
        std::cout << text_body;
    if (out_path) {
        std::ofstream out(*out_path);
        if (!out) throw minterp::StructuralError("cannot write '" + *out_path + "'");
        out << canonical.dump(2) << "\n";
    }
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string render_table(const std::vector<std::string>& labels,
                         const std::function<std::string(std::size_t, std::size_t)>& cell) {
    std::size_t width = 12;
    for (const auto& l : labels) width = std::max(width, l.size() + 2);
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < labels.size(); ++j) width = std::max(width, cell(i, j).size() + 2);
    std::ostringstream os;
    os << std::string(width, ' ');
    for (const auto& l : labels) os << l << std::string(width - l.size(), ' ');
    os << "\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        os << labels[i] << std::string(width - labels[i].size(), ' ');
        for (std::size_t j = 0; j < labels.size(); ++j) {
            const std::string c = cell(i, j);
            os << c << std::string(width - c.size(), ' ');
        }
        os << "\n";
    }
    return os.str();
}

int run_validate(const std::string& path, double tol, const std::string& format,
                 const std::optional<std::string>& out_path) {
    const Stopwatch watch;
    const Instance inst = minterp::load_instance(path);
    json body;
    body["command"] = json{{"command", "validate"}, {"input", path}, {"tol", tol}};
    body["digest"] = inst.digest();
    std::ostringstream text;
    text << "validate " << path << " (digest " << inst.digest() << ")\n";
    bool ok = true;

    const auto add_report = [&](const char* name, const minterp::ValidationReport& rep) {
        json rj = json::array();
        for (const auto& v : rep.violations) {
            rj.push_back(json{{"rule", v.rule}, {"points", v.points}, {"lhs", v.lhs}, {"rhs", v.rhs}});
        }
        body["reports"][name] = rj;
        text << "  " << name << ": " << (rep.ok() ? "ok" : rep.describe());
        if (rep.ok()) text << "\n";
        ok = ok && rep.ok();
    };

    add_report("d0", inst.d0_matrix().validate(tol));
    add_report("d1", inst.d1_matrix().validate(tol));
    add_report("dX", inst.dx_matrix().validate(tol));
    try {
        const CompatiblePair pair = inst.to_pair();
        add_report("pair", minterp::validate_pair(pair, tol));
    } catch (const minterp::Error& e) {
        body["reports"]["pair"] = json::array({json{{"rule", "structure"}, {"message", e.what()}}});
        text << "  pair: " << e.what() << "\n";
        ok = false;
    }
    body["status"] = ok ? "pass" : "fail";
    text << "status: " << (ok ? "pass" : "fail") << "\n" << watch.line();
    emit(text.str(), body, format, out_path);
    return ok ? kExitOk : kExitFailure;
}

int run_compute(const std::string& path, const std::string& what, double t, double theta,
                const std::string& q_text, double tol, const std::string& format,
                const std::optional<std::string>& out_path) {
    const Stopwatch watch;
    const Instance inst = minterp::load_instance(path);
    const CompatiblePair pair = inst.to_pair();
    json body;
    body["command"] = json{{"command", "compute"}, {"what", what}, {"input", path}, {"tol", tol}};
    body["digest"] = inst.digest();
    std::ostringstream text;

    const auto labels_for = [&](bool on_union) -> const std::vector<std::string>& {
        return on_union ? pair.union_labels() : pair.intersection_labels();
    };

    if (what == "km" || what == "jm") {
        body["command"]["t"] = t;
        const minterp::MetricMatrix m = (what == "km") ? km_matrix(pair, t) : jm_matrix(pair, t);
        json rows = json::array();
        for (std::size_t i = 0; i < m.size(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j));
            rows.push_back(std::move(row));
        }
        body["labels"] = m.labels();
        body["values"] = std::move(rows);
        text << what << "(t=" << format_double(t) << ") on " << path << "\n"
             << render_table(m.labels(), [&](std::size_t i, std::size_t j) { return format_double(m.at(i, j)); })
             << watch.line();
        emit(text.str(), body, format, out_path);
        return kExitOk;
    }

    const InterpParams params(theta, parse_q(q_text));
    body["command"]["theta"] = params.theta();
    body["command"]["q"] = params.q_is_inf() ? json("inf") : json(params.q());

    if (what == "beta") {
        minterp::BetaOptions opts;
        opts.max_half_width = window_cap_from_env();
        const minterp::BetaMatrix m = beta_matrix(pair, params, opts);
        const auto& pts = labels_for(false);
        json rows = json::array();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < pts.size(); ++j)
                row.push_back(json::array({m.at(i, j).lower, m.at(i, j).upper}));
            rows.push_back(std::move(row));
        }
        body["labels"] = pts;
        body["values"] = std::move(rows);
        text << "beta(theta=" << format_double(theta) << ", q=" << q_text << ") on " << path << "\n"
             << render_table(pts, [&](std::size_t i, std::size_t j) {
                    return "[" + format_double(m.at(i, j).lower) + ", " + format_double(m.at(i, j).upper) + "]";
                })
             << watch.line();
        emit(text.str(), body, format, out_path);
        return kExitOk;
    }
    if (what == "p") {
        const auto& pts = labels_for(false);
        json rows = json::array();
        json chains = json::array();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < pts.size(); ++j) {
                const minterp::PResult r = p_func(pair, params, pts[i], pts[j]);
                row.push_back(r.value);
                if (i != j)
                    chains.push_back(json{{"x", pts[i]},
                                          {"y", pts[j]},
                                          {"start_k", r.argmin.start_k},
                                          {"points", r.argmin.points}});
            }
            rows.push_back(std::move(row));
        }
        body["labels"] = pts;
        body["values"] = rows;
        body["argmin_chains"] = std::move(chains);
        text << "p(theta=" << format_double(theta) << ", q=" << q_text << ") on " << path
             << "  [row = x, column = y]\n"
             << render_table(pts, [&](std::size_t i, std::size_t j) {
                    return format_double(rows[i][j].get<double>());
                })
             << watch.line();
        emit(text.str(), body, format, out_path);
        return kExitOk;
    }
    if (what == "delta") {
        const minterp::DeltaMatrix m = delta_matrix(pair, params);
        const auto& pts = labels_for(false);
        json rows = json::array();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < pts.size(); ++j) row.push_back(m.at(i, j));
            rows.push_back(std::move(row));
        }
        body["labels"] = pts;
        body["values"] = std::move(rows);
        text << "delta(theta=" << format_double(theta) << ", q=" << q_text << ") on " << path << "\n"
             << render_table(pts, [&](std::size_t i, std::size_t j) { return format_double(m.at(i, j)); })
             << watch.line();
        emit(text.str(), body, format, out_path);
        return kExitOk;
    }
    throw minterp::DomainError("unknown --what '" + what + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minterp: interpolated metrics on finite compatible pairs"};
    app.require_subcommand(1);

    std::string instance_path;
    std::string what = "km";
    std::string q_text = "2";
    std::string suite = "all";
    std::string format = "text";
    std::optional<std::string> out_path;
    double t = 1.0;
    double theta = 0.5;
    double tol = minterp::kDefaultTol;
    int random_count = 0;
    int threads = 1;
    std::uint64_t seed = 0;

    auto* validate = app.add_subcommand("validate", "check metric axioms and pair compatibility");
    validate->add_option("instance", instance_path, "instance JSON file")->required();
    validate->add_option("--tol", tol, "absolute comparison tolerance");
    validate->add_option("--format", format, "stdout format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    validate->add_option("--out", out_path, "write the canonical JSON report to this path");

    auto* compute = app.add_subcommand("compute", "evaluate a functional or interpolated metric");
    compute->add_option("instance", instance_path, "instance JSON file")->required();
    compute->add_option("--what", what, "km|jm|beta|p|delta")
        ->required()
        ->check(CLI::IsMember({"km", "jm", "beta", "p", "delta"}));
    compute->add_option("--t", t, "scale for km/jm (positive)");
    compute->add_option("--theta", theta, "interpolation exponent in (0,1)");
    compute->add_option("--q", q_text, "integrability parameter in [1,inf]; 'inf' for the supremum form");
    compute->add_option("--tol", tol, "absolute comparison tolerance");
    compute->add_option("--format", format, "stdout format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    compute->add_option("--out", out_path, "write the canonical JSON report to this path");

    auto* verify = app.add_subcommand("verify", "run property-verification suites");
    verify->add_option("instance", instance_path,
                       "instance JSON file (operator JSON for the operator suites)");
    verify->add_option("--suite", suite,
                       "metric-axioms|lemma-inequalities|separator|interpolation-theorem|"
                       "fixed-point|oracle-equivalence|all");
    verify->add_option("--random", random_count, "number of generated cases per suite");
    verify->add_option("--seed", seed, "master seed for generated cases");
    verify->add_option("--tol", tol, "absolute comparison tolerance");
    verify->add_option("--threads", threads, "worker threads (report bytes are thread-count independent)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", format, "stdout format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_path, "write the canonical JSON report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(validate)) return run_validate(instance_path, tol, format, out_path);
        if (app.got_subcommand(compute)) return run_compute(instance_path, what, t, theta, q_text, tol, format, out_path);

        // verify
        if (!minterp::is_known_suite(suite)) {
            std::cerr << "error: unknown suite '" << suite << "'\n";
            return kExitUsage;
        }
        if (instance_path.empty() && random_count <= 0) {
            std::cerr << "error: verify needs an input file or --random N\n";
            return kExitUsage;
        }
        if (!instance_path.empty() && random_count > 0) {
            std::cerr << "error: verify takes an input file or --random N, not both\n";
            return kExitUsage;
        }
        minterp::SuiteOptions opts;
        opts.suite = suite;
        opts.random_count = random_count;
        opts.seed = seed;
        opts.tol = tol;
        opts.threads = threads;
        if (!instance_path.empty()) opts.input_path = instance_path;
        const minterp::RunReport report = minterp::run_suites(opts);
        emit(report.text(), report.to_json(), format, out_path);
        return report.ok() ? kExitOk : kExitFailure;
    } catch (const minterp::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const minterp::StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const minterp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
