#include "minterp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>
#include <thread>

#include "minterp/functionals.hpp"
#include "minterp/interp_jmprime.hpp"
#include "minterp/operators.hpp"
#include "minterp/oracle.hpp"
#include "minterp/random_instance.hpp"
#include "minterp/seqnorm.hpp"

namespace minterp {

using nlohmann::json;

std::vector<InterpParams> default_param_grid() {
    std::vector<InterpParams> grid;
    for (const double theta : {0.25, 0.5, 0.75})
        for (const double q : {1.0, 2.0, kInfiniteExponent}) grid.emplace_back(theta, q);
    return grid;
}

std::vector<double> default_t_grid() { return {0.25, 0.5, 1.0, 2.0, 4.0}; }

int SuiteResult::passed() const {
    return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; }));
}

int SuiteResult::failed() const { return static_cast<int>(cases.size()) - passed(); }

bool RunReport::ok() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failed() == 0; });
}

json RunReport::to_json() const {
    json j;
    j["command"] = command;
    json arr = json::array();
    for (const auto& s : suites) {
        json sj;
        sj["name"] = s.name;
        sj["passed"] = s.passed();
        sj["failed"] = s.failed();
        json cases = json::array();
        for (const auto& c : s.cases) {
            json cj;
            cj["id"] = c.id;
            cj["status"] = c.pass ? "pass" : "fail";
            if (!c.info.is_null()) cj["info"] = c.info;
            if (!c.pass) cj["witness"] = c.witness;
            cases.push_back(std::move(cj));
        }
        sj["cases"] = std::move(cases);
        if (!s.notes.is_null()) sj["notes"] = s.notes;
        arr.push_back(std::move(sj));
    }
    j["suites"] = std::move(arr);
    j["status"] = ok() ? "pass" : "fail";
    return j;
}

std::string RunReport::text() const {
    std::ostringstream os;
    os << "verify report\n";
    for (const auto& s : suites) {
        os << "  suite " << s.name << ": " << s.passed() << "/" << s.cases.size() << " passed";
        if (!s.notes.is_null()) os << "  notes=" << s.notes.dump();
        os << "\n";
        if (s.cases.size() == 1 && !s.cases.front().info.is_null())
            os << "    " << s.cases.front().id << ": " << s.cases.front().info.dump() << "\n";
        for (const auto& c : s.cases)
            if (!c.pass) os << "    FAIL " << c.id << ": " << c.witness.dump() << "\n";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", wall_seconds);
    os << "status: " << (ok() ? "pass" : "fail") << " (" << buf << " s)\n";
    return os.str();
}

namespace {

const std::vector<std::string>& suite_registry() {
    static const std::vector<std::string> names = {"metric-axioms",         "lemma-inequalities",
                                                   "separator",             "interpolation-theorem",
                                                   "fixed-point",           "oracle-equivalence"};
    return names;
}

std::string case_name(std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "case-%04zu", i);
    return buf;
}

json params_json(const InterpParams& p) {
    json j;
    j["theta"] = p.theta();
    j["q"] = p.q_is_inf() ? json("inf") : json(p.q());
    return j;
}

/// Collects the first failure of a case; later checks still run but only
/// the first witness is kept.
struct CaseContext {
    CaseResult result;
    json base; // shared replay data: digest, seed

    explicit CaseContext(std::string id) { result.id = std::move(id); }

    void fail(json witness) {
        if (!result.pass) return;
        result.pass = false;
        for (auto& [k, v] : base.items()) witness[k] = v;
        result.witness = std::move(witness);
    }

    bool expect_le(const char* check, double lhs, double rhs, double tol, json extra = {}) {
        if (lhs <= rhs + tol) return true;
        extra["check"] = check;
        extra["lhs"] = lhs;
        extra["rhs"] = rhs;
        fail(std::move(extra));
        return false;
    }

    void expect_clean(const char* check, const ValidationReport& report, json extra = {}) {
        if (report.ok()) return;
        const auto& v = report.violations.front();
        extra["check"] = check;
        extra["rule"] = v.rule;
        extra["points"] = v.points;
        extra["lhs"] = v.lhs;
        extra["rhs"] = v.rhs;
        fail(std::move(extra));
    }
};

struct CaseInputs {
    std::uint64_t seed = 0;
    const Instance* file_instance = nullptr;      // instance-file mode
    const std::string* operator_path = nullptr;   // operator-file mode
    const std::vector<InterpParams>* grid = nullptr;
    double tol = kDefaultTol;
};

Instance case_instance(const CaseInputs& in, const GenOptions& opts) {
    if (in.file_instance) return *in.file_instance;
    return random_instance(in.seed, opts);
}

// ---------------------------------------------------------------------------
// Suite case bodies
// ---------------------------------------------------------------------------

CaseResult metric_axioms_case(std::size_t idx, const CaseInputs& in) {
    CaseContext ctx(case_name(idx));
    const Instance inst = case_instance(in, GenOptions{});
    ctx.base["digest"] = inst.digest();
    ctx.base["seed"] = in.seed;
    const CompatiblePair pair = inst.to_pair();
    for (const double t : default_t_grid()) {
        json extra;
        extra["t"] = t;
        ctx.expect_clean("km-metric-axioms", km_matrix(pair, t).validate(in.tol), extra);
        ctx.expect_clean("jm-metric-axioms", jm_matrix(pair, t).validate(in.tol), extra);
    }
    for (const auto& params : *in.grid) {
        json extra;
        extra["params"] = params_json(params);
        ctx.expect_clean("delta-metric-axioms", delta_matrix(pair, params).validate(in.tol), extra);
    }
    return ctx.result;
}

CaseResult lemma_inequalities_case(std::size_t idx, const CaseInputs& in) {
    CaseContext ctx(case_name(idx));
    const Instance inst = case_instance(in, GenOptions{});
    ctx.base["digest"] = inst.digest();
    ctx.base["seed"] = in.seed;
    const CompatiblePair pair = inst.to_pair();
    Rng rng(Rng::mix(in.seed, 0xabcdULL));

    const auto& inter = pair.intersection_labels();
    for (int rep = 0; rep < 20 && ctx.result.pass; ++rep) {
        const bool dyadic = rep < 10;
        const double a = dyadic ? std::exp2(rng.uniform_int(-4, 4)) : std::exp2(rng.uniform(-4.0, 4.0));
        const double b = dyadic ? std::exp2(rng.uniform_int(-4, 4)) : std::exp2(rng.uniform(-4.0, 4.0));
        const MetricMatrix ka = km_matrix(pair, a);
        const MetricMatrix kb = km_matrix(pair, b);
        const double grow = std::max(1.0, a / b);
        const double shrink = std::min(1.0, a / b);
        json extra;
        extra["a"] = a;
        extra["b"] = b;
        const auto& nodes = pair.union_labels();
        for (std::size_t i = 0; i < nodes.size() && ctx.result.pass; ++i)
            for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                json e = extra;
                e["x"] = nodes[i];
                e["y"] = nodes[j];
                if (!ctx.expect_le("km-scale-comparison", ka.at(i, j), grow * kb.at(i, j), in.tol, e)) break;
            }
        for (std::size_t i = 0; i < inter.size() && ctx.result.pass; ++i)
            for (std::size_t j = i + 1; j < inter.size(); ++j) {
                json e = extra;
                e["x"] = inter[i];
                e["y"] = inter[j];
                const double ja = jm(pair, a, inter[i], inter[j]);
                const double jb = jm(pair, b, inter[i], inter[j]);
                if (!ctx.expect_le("jm-scale-comparison", ja, grow * jb, in.tol, e)) break;
                if (!ctx.expect_le("km-below-jm", ka.at(inter[i], inter[j]), shrink * jb, in.tol, e)) break;
            }
    }
    return ctx.result;
}

CaseResult separator_case(std::size_t idx, const CaseInputs& in, double* asym_out) {
    CaseContext ctx(case_name(idx));
    const Instance inst = case_instance(in, GenOptions{});
    ctx.base["digest"] = inst.digest();
    ctx.base["seed"] = in.seed;
    const CompatiblePair pair = inst.to_pair();
    const auto& inter = pair.intersection_labels();
    const MetricMatrix k1 = km_matrix(pair, 1.0);
    double max_asym = 0.0;

    for (const auto& params : *in.grid) {
        const double mh = m_holder(params);
        const DeltaMatrix delta = delta_matrix(pair, params);
        for (const auto& x : inter) {
            if (p_value(pair, params, x, x) != 0.0) {
                json e;
                e["check"] = "separator-diagonal";
                e["x"] = x;
                e["params"] = params_json(params);
                ctx.fail(std::move(e));
            }
        }
        for (std::size_t i = 0; i < inter.size(); ++i)
            for (std::size_t j = i + 1; j < inter.size(); ++j) {
                const auto& x = inter[i];
                const auto& y = inter[j];
                const double pxy = p_value(pair, params, x, y);
                const double pyx = p_value(pair, params, y, x);
                const double pp = 0.5 * (pxy + pyx);
                const double dl = delta.at(i, j);
                const double kk = k1.at(x, y);
                const double jj = jm(pair, 1.0, x, y);
                max_asym = std::max(max_asym, std::abs(pxy - pyx));
                json e;
                e["params"] = params_json(params);
                e["x"] = x;
                e["y"] = y;
                ctx.expect_le("p-below-jm1", pxy, jj, in.tol, e);
                ctx.expect_le("p-below-jm1", pyx, jj, in.tol, e);
                ctx.expect_le("km1-below-mholder-p", kk, mh * pxy, in.tol, e);
                ctx.expect_le("km1-below-mholder-p", kk, mh * pyx, in.tol, e);
                ctx.expect_le("km1-below-mholder-delta", kk, mh * dl, in.tol, e);
                ctx.expect_le("delta-below-bigp", dl, pp, in.tol, e);
                ctx.expect_le("bigp-between-orientations-lo", std::min(pxy, pyx), pp, in.tol, e);
                ctx.expect_le("bigp-between-orientations-hi", pp, std::max(pxy, pyx), in.tol, e);
                if (pxy <= 0.0 || pyx <= 0.0) {
                    e["check"] = "separator-positivity";
                    e["p_xy"] = pxy;
                    e["p_yx"] = pyx;
                    ctx.fail(std::move(e));
                }
            }
        if (!ctx.result.pass) break;
    }
    *asym_out = max_asym;
    return ctx.result;
}

CaseResult interpolation_case(std::size_t idx, const CaseInputs& in) {
    CaseContext ctx(case_name(idx));
    const InterpParams params = (*in.grid)[idx % in.grid->size()];
    json e;
    e["params"] = params_json(params);

    std::unique_ptr<OperatorTable> op;
    if (in.operator_path) {
        op = std::make_unique<OperatorTable>(load_operator(*in.operator_path));
    } else {
        GenOptions gen;
        gen.min_points = 6;
        gen.max_points = 6;
        gen.min_intersection = 2;
        const Instance dom = random_instance(Rng::mix(in.seed, 1), gen);
        const Instance cod = random_instance(Rng::mix(in.seed, 2), gen);
        const CompatiblePair dpair = dom.to_pair();
        const CompatiblePair cpair = cod.to_pair();
        op = std::make_unique<OperatorTable>(dpair, cpair,
                                             random_admissible_map(Rng::mix(in.seed, 3), dpair, cpair));
        ctx.base["domain_digest"] = dom.digest();
        ctx.base["codomain_digest"] = cod.digest();
        ctx.base["seed"] = in.seed;
    }
    const InterpolationReport rep = verify_interpolation(*op, params, in.tol);
    e["omega0"] = rep.omega0;
    e["omega1"] = rep.omega1;
    e["measured"] = rep.measured;
    e["witness_x"] = rep.witness_x;
    e["witness_y"] = rep.witness_y;
    ctx.expect_le("lipschitz-theta-bound", rep.measured, rep.bound_theta, in.tol, e);
    ctx.expect_le("lipschitz-max-bound", rep.measured, rep.bound_max, in.tol, e);
    return ctx.result;
}

CaseResult fixed_point_case(std::size_t idx, const CaseInputs& in) {
    CaseContext ctx(case_name(idx));
    std::unique_ptr<OperatorTable> op;
    if (in.operator_path) {
        op = std::make_unique<OperatorTable>(load_operator(*in.operator_path));
    } else {
        GenOptions gen;
        gen.min_points = 3;
        gen.max_points = 8;
        const Instance inst = random_instance(Rng::mix(in.seed, 1), gen);
        const CompatiblePair pair = inst.to_pair();
        op = std::make_unique<OperatorTable>(pair, pair, random_contraction_map(Rng::mix(in.seed, 2), pair));
        ctx.base["digest"] = inst.digest();
        ctx.base["seed"] = in.seed;
    }
    const FixedPointResult fp = fixed_point(*op, in.tol);

    // Independent scan over the union: the unique point with T(p) = p.
    std::vector<std::string> stationary;
    for (const auto& label : op->domain().union_labels())
        if (op->apply(label) == label) stationary.push_back(label);
    if (stationary.size() != 1 || stationary.front() != fp.point) {
        json e;
        e["check"] = "fixed-point-scan";
        e["iterated"] = fp.point;
        e["stationary"] = stationary;
        ctx.fail(std::move(e));
    } else {
        ctx.result.info = json{{"fixed_point", fp.point}};
    }
    return ctx.result;
}

CaseResult oracle_equivalence_case(std::size_t idx, const CaseInputs& in) {
    CaseContext ctx(case_name(idx));
    const InterpParams params = (*in.grid)[idx % in.grid->size()];
    constexpr double kExact = 1e-12; // oracle agreement is an exactness contract, not tolerance-tuned

    GenOptions gen;
    gen.min_points = 2;
    gen.max_points = 6;
    gen.max_intersection = 4;
    const Instance inst = case_instance(in, gen);
    ctx.base["digest"] = inst.digest();
    ctx.base["seed"] = in.seed;
    const CompatiblePair pair = inst.to_pair();
    const EnumBudget budget;

    const auto& nodes = pair.union_labels();
    for (const double t : default_t_grid())
        for (std::size_t i = 0; i < nodes.size() && ctx.result.pass; ++i)
            for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                const double fast = km(pair, t, nodes[i], nodes[j]);
                const double slow = km_bruteforce(pair, t, nodes[i], nodes[j], budget);
                if (std::abs(fast - slow) > kExact) {
                    json e;
                    e["check"] = "km-vs-bruteforce";
                    e["t"] = t;
                    e["x"] = nodes[i];
                    e["y"] = nodes[j];
                    e["solver"] = fast;
                    e["oracle"] = slow;
                    ctx.fail(std::move(e));
                    break;
                }
            }

    const auto& inter = pair.intersection_labels();
    if (inter.size() > 4) {
        ctx.result.info = json{{"p_delta", "skipped: intersection larger than the enumeration budget"}};
        return ctx.result;
    }
    for (std::size_t i = 0; i < inter.size() && ctx.result.pass; ++i)
        for (std::size_t j = 0; j < inter.size(); ++j) {
            if (i == j) continue;
            const double fast = p_value(pair, params, inter[i], inter[j]);
            const double slow = p_bruteforce(pair, params, inter[i], inter[j], budget);
            if (std::abs(fast - slow) > kExact) {
                json e;
                e["check"] = "p-vs-bruteforce";
                e["params"] = params_json(params);
                e["x"] = inter[i];
                e["y"] = inter[j];
                e["solver"] = fast;
                e["oracle"] = slow;
                ctx.fail(std::move(e));
                break;
            }
        }
    if (ctx.result.pass) {
        const DeltaMatrix fast = delta_matrix(pair, params);
        const DeltaMatrix slow = delta_bruteforce(pair, params, budget);
        for (std::size_t i = 0; i < inter.size() && ctx.result.pass; ++i)
            for (std::size_t j = i + 1; j < inter.size(); ++j)
                if (std::abs(fast.at(i, j) - slow.at(i, j)) > kExact) {
                    json e;
                    e["check"] = "delta-vs-bruteforce";
                    e["params"] = params_json(params);
                    e["x"] = inter[i];
                    e["y"] = inter[j];
                    e["solver"] = fast.at(i, j);
                    e["oracle"] = slow.at(i, j);
                    ctx.fail(std::move(e));
                    break;
                }
    }
    return ctx.result;
}

// ---------------------------------------------------------------------------
// Scheduling
// ---------------------------------------------------------------------------

void run_cases(int threads, std::size_t count, const std::function<CaseResult(std::size_t)>& body,
               std::vector<CaseResult>& out) {
    out.resize(count);
    std::atomic<std::size_t> cursor{0};
    const auto worker = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= count) break;
            try {
                out[i] = body(i);
            } catch (const std::exception& e) {
                CaseResult r;
                r.id = case_name(i);
                r.pass = false;
                r.witness = json{{"error", e.what()}};
                out[i] = std::move(r);
            }
        }
    };
    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace

bool is_known_suite(const std::string& name) {
    if (name == "all") return true;
    const auto& reg = suite_registry();
    return std::find(reg.begin(), reg.end(), name) != reg.end();
}

RunReport run_suites(const SuiteOptions& opts) {
    if (!is_known_suite(opts.suite)) throw DomainError("unknown suite '" + opts.suite + "'");
    const auto t0 = std::chrono::steady_clock::now();

    RunReport report;
    report.command["command"] = "verify";
    report.command["suite"] = opts.suite;
    report.command["random"] = opts.random_count;
    report.command["seed"] = opts.seed;
    report.command["tol"] = opts.tol;
    report.command["input"] = opts.input_path ? json(*opts.input_path) : json(nullptr);

    const std::vector<InterpParams> grid = default_param_grid();
    std::optional<Instance> file_instance;
    const bool file_mode = opts.input_path.has_value();
    const bool operator_file = file_mode && is_operator_json(*opts.input_path);

    const auto& registry = suite_registry();
    for (std::size_t si = 0; si < registry.size(); ++si) {
        const std::string& name = registry[si];
        if (opts.suite != "all" && opts.suite != name) continue;
        const bool operator_suite = (name == "interpolation-theorem" || name == "fixed-point");

        SuiteResult suite;
        suite.name = name;

        // File inputs only feed the suites of their kind; under "all" the
        // other suites are skipped with a note, a named mismatch is an error.
        if (file_mode && operator_suite != operator_file) {
            if (opts.suite != "all")
                throw DomainError("suite '" + name + "' needs " +
                                  (operator_suite ? std::string("an operator file")
                                                  : std::string("an instance file")));
            suite.notes = json{{"skipped", operator_suite ? "input is an instance file"
                                                          : "input is an operator file"}};
            report.suites.push_back(std::move(suite));
            continue;
        }
        if (file_mode && !operator_suite && !file_instance)
            file_instance = load_instance(*opts.input_path);
        const std::size_t count = file_mode ? 1 : static_cast<std::size_t>(opts.random_count);
        std::vector<double> asymmetry(count, 0.0);

        const auto body = [&](std::size_t i) -> CaseResult {
            CaseInputs in;
            in.seed = Rng::mix(opts.seed, si * 1000003ULL + i);
            in.grid = &grid;
            in.tol = opts.tol;
            if (file_mode) {
                if (operator_suite)
                    in.operator_path = &*opts.input_path;
                else
                    in.file_instance = &*file_instance;
            }
            if (name == "metric-axioms") return metric_axioms_case(i, in);
            if (name == "lemma-inequalities") return lemma_inequalities_case(i, in);
            if (name == "separator") return separator_case(i, in, &asymmetry[i]);
            if (name == "interpolation-theorem") return interpolation_case(i, in);
            if (name == "fixed-point") return fixed_point_case(i, in);
            return oracle_equivalence_case(i, in);
        };
        run_cases(opts.threads, count, body, suite.cases);
        if (name == "separator" && count > 0) {
            const double max_asym = *std::max_element(asymmetry.begin(), asymmetry.end());
            suite.notes = json{{"max_p_asymmetry", max_asym}};
        }
        report.suites.push_back(std::move(suite));
    }

    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace minterp
