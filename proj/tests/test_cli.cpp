// Exercises the installed command-line surface: exit-code contract,
// worked values in machine output, and seeded-report determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef MINTERP_CLI
#error "MINTERP_CLI must point at the built binary"
#endif
#ifndef MINTERP_SOURCE_DIR
#error "MINTERP_SOURCE_DIR must point at the repository root"
#endif

namespace {

struct RunOutput {
    int exit_code = -1;
    std::string stdout_text;
};

RunOutput run_cli(const std::string& args, bool raw_command = false) {
    const std::string out_file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                                 "/minterp_cli_test_out.txt";
    const std::string cmd = (raw_command ? args : std::string(MINTERP_CLI) + " " + args) + " > " + out_file +
                            " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunOutput result;
    result.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    result.stdout_text = ss.str();
    std::remove(out_file.c_str());
    return result;
}

std::string data(const std::string& rel) { return std::string(MINTERP_SOURCE_DIR) + "/" + rel; }

} // namespace

TEST_CASE("validate: clean instance exits 0, triangle violation 1, malformed json 2") {
    CHECK(run_cli("validate " + data("instances/e1.json")).exit_code == 0);

    const auto bad = run_cli("validate " + data("tests/data/triangle_violation.json"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.stdout_text.find("triangle") != std::string::npos);

    CHECK(run_cli("validate " + data("tests/data/malformed.json")).exit_code == 2);
    CHECK(run_cli("validate /nonexistent.json").exit_code == 2);
}

TEST_CASE("compute km on E3 reports the routed distance") {
    const auto r = run_cli("compute " + data("instances/e3.json") + " --what km --t 1.0 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.stdout_text);
    CHECK(j["labels"] == nlohmann::json({"a", "m", "b"}));
    CHECK(j["values"][0][2].get<double>() == doctest::Approx(3.0));
}

TEST_CASE("compute delta on E1 stays below J_M(1) = 3") {
    const auto r = run_cli("compute " + data("instances/e1.json") +
                           " --what delta --theta 0.5 --q inf --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.stdout_text);
    CHECK(j["values"][0][1].get<double>() <= 3.0 + 1e-9);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("compute " + data("instances/e1.json") + " --what p --theta 1.5").exit_code == 2);
    CHECK(run_cli("compute " + data("instances/e1.json") + " --what nonsense").exit_code == 2);
    CHECK(run_cli("verify --suite bogus --random 2").exit_code == 2);
    CHECK(run_cli("verify --suite all").exit_code == 2); // neither file nor --random
    CHECK(run_cli("verify " + data("instances/e1.json") + " --random 2 --suite all").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("verify fixed-point on the contraction operator prints the fixed point") {
    const auto r = run_cli("verify " + data("instances/contraction_to_m.json") + " --suite fixed-point");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("fixed_point") != std::string::npos);
    CHECK(r.stdout_text.find("\"m\"") != std::string::npos);
}

TEST_CASE("verify on an axiom-breaking instance exits 1 with a witness") {
    // km is a shortest-path closure and repairs triangles, but J_M inherits
    // the broken d0 triangle, so the metric-axioms suite must fail.
    const auto r = run_cli("verify " + data("tests/data/triangle_violation.json") +
                           " --suite metric-axioms");
    CHECK(r.exit_code == 1);
    CHECK(r.stdout_text.find("jm-metric-axioms") != std::string::npos);
}

TEST_CASE("verify --suite all on a file runs the applicable suites and notes the rest") {
    const auto inst = run_cli("verify " + data("instances/e1.json") + " --suite all --format json");
    REQUIRE(inst.exit_code == 0);
    const auto j = nlohmann::json::parse(inst.stdout_text);
    for (const auto& s : j["suites"]) {
        const std::string name = s["name"].get<std::string>();
        if (name == "interpolation-theorem" || name == "fixed-point") {
            CHECK(s["cases"].empty());
            CHECK(s.contains("notes"));
        } else {
            CHECK(s["cases"].size() == 1);
        }
    }
    // A named suite with the wrong file kind is a usage error.
    CHECK(run_cli("verify " + data("instances/e1.json") + " --suite fixed-point").exit_code == 2);
    CHECK(run_cli("verify " + data("instances/contraction_to_m.json") + " --suite separator").exit_code == 2);
}

TEST_CASE("MINTERP_MAX_WINDOW lifts the certified-window cap for beta") {
    // theta*q = 0.25 needs a wider window than the default +-120 cap.
    const std::string args =
        "compute " + data("instances/e1.json") + " --what beta --theta 0.25 --q 1 --format json";
    CHECK(run_cli(args).exit_code == 1);
    const auto lifted = run_cli("MINTERP_MAX_WINDOW=512 " + std::string(MINTERP_CLI) + " " + args, true);
    CHECK(lifted.exit_code == 0);
}

TEST_CASE("seeded verify reruns are byte-identical") {
    const std::string args = "verify --random 6 --seed 99 --suite all --format json";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.stdout_text == b.stdout_text);
    const auto threaded = run_cli(args + " --threads 8");
    CHECK(a.stdout_text == threaded.stdout_text);
}
