// End-to-end tests of the eprcorr command-line tool: output schemas,
// determinism, figure presets and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#ifndef EPRCORR_CLI_PATH
#error "EPRCORR_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(EPRCORR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("eval reproduces the figure 3 caption value") {
    const RunResult r = run(
        "eval --planar --x 1.36 --psi 1.0471975512 --sigma 0.7853981634 "
        "--phi 0.7853981634 --theta 1.0471975512");
    CHECK(r.exit_code == 0);
    CHECK(std::abs(std::stod(r.output) - 0.5) < 1e-3);
}

TEST_CASE("eval --figure presets and --cross-check") {
    const RunResult r2 = run("eval --figure 2 --x 0.33333333333333333");
    CHECK(r2.exit_code == 0);
    CHECK(std::abs(std::stod(r2.output) + 1.0) < 1e-9);

    const RunResult rc = run("eval --figure 3 --x 0.9 --cross-check");
    CHECK(rc.exit_code == 0);
    const auto j = nlohmann::json::parse(rc.output);
    CHECK(j.contains("trace"));
    CHECK(j.contains("closed"));
    CHECK(j.contains("planar"));
    CHECK(j["max_difference"].get<double>() < 1e-10);
}

TEST_CASE("eval honors --deg") {
    const RunResult a = run("eval --x 0 --sigma 90 --phi 60 --theta 0 --deg");
    const RunResult b = run("eval --x 0 --sigma 1.5707963267948966 --phi 1.0471975511965976 "
                            "--theta 0");
    CHECK(a.exit_code == 0);
    CHECK(std::abs(std::stod(a.output) - std::stod(b.output)) < 1e-10);
    CHECK(std::abs(std::stod(a.output) - 0.5) < 1e-10);  // sin(90) cos(60)
}

TEST_CASE("scan emits the CSV schema") {
    const RunResult r = run("scan --figure 3 --x-lo 0 --x-hi 5 --n 64");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 65);
    CHECK(lines[0] == "x,value");
    CHECK(r.output.find('\r') == std::string::npos);
    CHECK(r.output.find(',') != std::string::npos);
    double prev = -1.0;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto comma = lines[i].find(',');
        REQUIRE(comma != std::string::npos);
        const double x = std::stod(lines[i].substr(0, comma));
        CHECK(x > prev);
        prev = x;
    }
}

TEST_CASE("degenerate two-point grid emits exactly two rows") {
    const RunResult r = run("scan --figure 3 --x-lo 0 --x-hi 1 --n 2");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "x,value");
}

TEST_CASE("scan --summary appends a JSON footer with the extremum") {
    const RunResult r = run("scan --figure 3 --x-lo 0 --x-hi 5 --n 128 --summary");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 130);
    const auto j = nlohmann::json::parse(lines.back());
    CHECK(std::abs(j["maximum"]["x"].get<double>() - 1.3634) < 0.01);
    CHECK(std::abs(j["maximum"]["value"].get<double>() - 0.5) < 1e-3);
    CHECK(j["crossings"].empty());
}

TEST_CASE("chsh-scan figure presets reproduce the captions") {
    const RunResult r4 = run("chsh-scan --figure 4 --x-lo 0 --x-hi 20 --n 512 --summary");
    CHECK(r4.exit_code == 0);
    const auto j4 = nlohmann::json::parse(lines_of(r4.output).back());
    CHECK(std::abs(j4["maximum"]["value"].get<double>() - 2.598) < 0.005);
    CHECK(std::abs(j4["maximum"]["x"].get<double>() - 0.71) < 0.02);
    REQUIRE(j4["crossings"].size() == 1);
    CHECK(std::abs(j4["crossings"][0].get<double>() - 6.38) < 0.02);

    const RunResult r5 = run("chsh-scan --figure 5 --x-lo 0 --x-hi 20 --n 512 --summary");
    const auto j5 = nlohmann::json::parse(lines_of(r5.output).back());
    REQUIRE(j5["crossings"].size() == 2);
    CHECK(std::abs(j5["crossings"][0].get<double>() - 0.21) < 0.02);
    CHECK(std::abs(j5["crossings"][1].get<double>() - 6.54) < 0.02);

    const RunResult r6 = run("chsh-scan --figure 6 --x-lo 0 --x-hi 20 --n 512 --summary");
    const auto j6 = nlohmann::json::parse(lines_of(r6.output).back());
    CHECK(j6["crossings"].empty());
    CHECK(std::abs(j6["maximum"]["value"].get<double>() - 2.8284271247) < 1e-6);
}

TEST_CASE("chsh-max attains the Tsirelson bound and is byte-deterministic") {
    const RunResult a = run("chsh-max --cm --starts 8 --seed 42");
    const RunResult b = run("chsh-max --cm --starts 8 --seed 42");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    const auto j = nlohmann::json::parse(a.output);
    CHECK(std::abs(j["value"].get<double>() - 2.8284271247) < 1e-6);
    CHECK(j["starts"].get<int>() == 8);
    CHECK(j["seed"].get<std::uint64_t>() == 42);

    const RunResult c = run("chsh-max --x 0.71 --psi 0.5235987756 --starts 8");
    CHECK(nlohmann::json::parse(c.output)["value"].get<double>() >= 2.598);
}

TEST_CASE("identical scans are byte-identical regardless of worker count") {
    const RunResult a = run("scan --figure 2 --x-lo 0 --x-hi 10 --n 200 --summary");
    const RunResult b = run("scan --figure 2 --x-lo 0 --x-hi 10 --n 200 --summary");
    CHECK(a.output == b.output);

    // worker parallelism must not change a single byte
    const std::string cmd = std::string("EPRCORR_WORKERS=4 ") + EPRCORR_CLI_PATH +
                            " scan --figure 2 --x-lo 0 --x-hi 10 --n 200 --summary 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    CHECK(out == a.output);
}

TEST_CASE("selftest reports named checks and exit codes") {
    const RunResult ok = run("selftest");
    CHECK(ok.exit_code == 0);
    const auto j = nlohmann::json::parse(ok.output);
    CHECK(j["all_passed"].get<bool>());
    CHECK(j["checks"].size() >= 12);
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("tolerance"));
        CHECK(c.contains("residual"));
        CHECK(c.contains("pass"));
    }

    const RunResult bad = run("selftest --corrupt-gamma");
    CHECK(bad.exit_code == 3);
    CHECK_FALSE(nlohmann::json::parse(bad.output)["all_passed"].get<bool>());
}

TEST_CASE("exit codes distinguish usage and physics errors") {
    CHECK(run("eval --no-such-flag").exit_code == 1);
    CHECK(run("nonexistent-command").exit_code == 1);
    CHECK(run("eval --x -1").exit_code == 2);                    // x < 0 is unphysical
    CHECK(run("scan --x-lo 5 --x-hi 1 --n 16").exit_code == 1);  // empty grid is a usage error
    CHECK(run("--help").exit_code == 0);
}
