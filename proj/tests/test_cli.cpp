#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "ada/json_io.hpp"
#include "generators.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, bool capture_stderr = false) {
    const std::string command = std::string(ADA_CLI_PATH) + " " + args +
                                (capture_stderr ? " 2>&1 >/dev/null" : " 2>/dev/null");
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), static_cast<int>(buffer.size()), pipe))
        result.out += buffer.data();
    const int status = pclose(pipe);
    result.exit_code = WEXITSTATUS(status);
    return result;
}

std::string data(const std::string& name) { return std::string(ADA_TEST_DATA_DIR) + "/" + name; }

} // namespace

TEST_CASE("transform") {
    const RunResult r = run_cli("transform --param " + data("pi.json") + " --ops F+");
    REQUIRE(r.exit_code == 0);
    const json out = json::parse(r.out);
    CHECK(out["slope"]["s"] == 5);
    CHECK(out["slope"]["r"] == 7);
    CHECK(out["c0"][0]["cols"] == json::array({5, 2}));
    CHECK(out["cinf"].empty());

    // output re-parses and re-validates
    CHECK_NOTHROW(ada::parameter_from_json(out));
}

TEST_CASE("transform is byte-deterministic") {
    const std::string args = "transform --param " + data("ex5.json") + " --ops F+,F-,F+";
    CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("label") {
    const RunResult r = run_cli("label --param " + data("ex5.json"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "D_3^7(sl_7, [2,1^5])\n");
}

TEST_CASE("diagram dot output") {
    const RunResult r = run_cli("diagram --param " + data("pi.json") + " --format dot");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("loops=1") != std::string::npos); // B_11 = 2 printed as one loop
    CHECK(r.out.find("q1:1") != std::string::npos);
}

TEST_CASE("mirror") {
    const RunResult r = run_cli("mirror --param " + data("ex5.json"));
    REQUIRE(r.exit_code == 0);
    const json out = json::parse(r.out);
    CHECK(out["label"] == "D_3^7(sl_7, [2,1^5])");
    CHECK(out["label_display"] == "D_3(sl_7, [2,1^5])");
    CHECK(out["parameter"]["slope"]["r"] == 1);
    CHECK(out["nonnegative"] == true);
    CHECK(out["dimension"] == 10);
}

TEST_CASE("orbit") {
    const RunResult r =
        run_cli("orbit --param " + data("pi.json") + " --max-denominator 8 --format json");
    REQUIRE(r.exit_code == 0);
    const json out = json::parse(r.out);
    CHECK(out["nodes"].size() == 4);
    const RunResult dot =
        run_cli("orbit --param " + data("pi.json") + " --max-denominator 8 --format dot");
    CHECK(dot.out.find("digraph orbit") != std::string::npos);
    CHECK(dot.out.find("F+") != std::string::npos);
}

TEST_CASE("verify suites pass on the bundled parameters") {
    for (const std::string suite : {"pipeline", "orbit", "diagrams"}) {
        const RunResult r =
            run_cli("verify --suite " + suite + " --param " + data("pi.json") +
                    " --max-denominator 8");
        REQUIRE(r.exit_code == 0);
        CHECK(json::parse(r.out)["pass"] == true);
    }
    const RunResult d =
        run_cli("verify --suite dualities --param " + data("ex5.json") + " --l 3");
    REQUIRE(d.exit_code == 0);
    CHECK(json::parse(d.out)["pass"] == true);
}

TEST_CASE("error reporting") {
    // domain error: rank identity violated -> exit 1, JSON on stderr
    const std::string bad = "/tmp/ada_cli_bad_param.json";
    {
        FILE* f = fopen(bad.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs(R"({"m": 1, "slope": {"s": 5, "r": 2}, "c0": [{"eig": "1", "cols": [1]}], "cinf": []})",
              f);
        fclose(f);
    }
    const RunResult r = run_cli("label --param " + bad, /*capture_stderr=*/true);
    CHECK(r.exit_code == 1);
    CHECK(json::parse(r.out)["error"] == "RankMismatch");

    // usage error -> exit 2
    CHECK(run_cli("label", /*capture_stderr=*/true).exit_code == 2);
    CHECK(run_cli("frobnicate --param x", /*capture_stderr=*/true).exit_code == 2);

    // not-allowed operation -> exit 1 with the error code
    const RunResult na =
        run_cli("transform --param " + data("pi.json") + " --ops F-", /*capture_stderr=*/true);
    CHECK(na.exit_code == 1);
    CHECK(json::parse(na.out)["error"] == "NotAllowed");
}

TEST_CASE("json round trips") {
    gen::Rng rng(81);
    for (int trial = 0; trial < 100; ++trial) {
        const ada::ADAParameter t = gen::random_reachable(rng, /*with_twists=*/true);
        CHECK(ada::parameter_from_json(ada::to_json(t)) == t);
    }
    // shorthand forms on input
    const json shorthand = {{"m", 1},
                            {"slope", "5/2"},
                            {"c0", json::array({{{"eig", "1"}, {"cols", "2"}}})},
                            {"cinf", json::array()}};
    const ada::ADAParameter pi = ada::parameter_from_json(shorthand);
    CHECK(pi.slope == ada::Slope(5, 2));
    CHECK(pi.c0 == ada::ConjugacyClass::unipotent(ada::YoungDiagram({2})));
}
