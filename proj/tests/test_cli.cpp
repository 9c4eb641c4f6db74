#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "helpers.hpp"
#include "robin/extremal.hpp"
#include "robin/io.hpp"

using Catch::Approx;
using namespace robin;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    const char* bin = std::getenv("ROBIN_ROD_BIN");
    REQUIRE(bin != nullptr);
    const std::string cmd = env_prefix + std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        out.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("bound --theorem 1 reports the sharp gap bound", "[cli]") {
    const auto r = run("bound --theorem 1 --alpha 0.5 --m 1 --M 3 --s 1.4");
    REQUIRE(r.exit_code == 0);
    const auto j = io::json::parse(r.out);
    const auto expected = extremal::max_osc_bound(make_params(0.5),
                                                  make_class(1.0, 3.0, 1.4));
    CHECK(j["bound"].get<double>() == Approx(expected.bound).margin(1e-12));
    CHECK(j["source"]["values"].size() == 3);
}

TEST_CASE("bound --theorem 2 needs a spot and emits both sides", "[cli]") {
    CHECK(run("bound --theorem 2 --alpha 1 --m 0 --M 1 --s 0.5").exit_code == 2);
    const auto r = run("bound --theorem 2 --alpha 1 --m 0 --M 1 --s 0.5 --x0 0");
    REQUIRE(r.exit_code == 0);
    const auto j = io::json::parse(r.out);
    CHECK(j["upper"]["bound"].get<double>() ==
          Approx(5.271897977203406).margin(1e-9));
    CHECK(j["lower"]["bound"].is_number());
}

TEST_CASE("solve handles the zero source", "[cli]") {
    const std::string path = "/tmp/robin_rod_zero_source.json";
    io::write_file(path, "{\"breakpoints\": [-3.141592653589793, 0.0, "
                         "3.141592653589793], \"values\": [0.0, 0.0]}\n");
    const auto r = run("solve --source " + path + " --alpha 1");
    REQUIRE(r.exit_code == 0);
    const auto j = io::json::parse(r.out);
    CHECK(j["extrema"]["osc"].get<double>() == 0.0);
    for (const auto& seg : j["solution"]["segments"]) {
        CHECK(seg["q0"].get<double>() == 0.0);
    }
}

TEST_CASE("verify passes on the half-heating benchmark class", "[cli]") {
    const auto r = run("verify --alpha 1 --m 0 --M 1 --s 0.5 "
                       "--n-cells 500 --n-grid 500 --n-samples 10 --seed 3");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find("[PASS]") != std::string::npos);
}

TEST_CASE("figure output is byte-stable across runs", "[cli]") {
    const auto first = run("figure fig1a");
    const auto second = run("figure fig1a");
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.rfind("alpha,max_gap\n", 0) == 0);

    const auto svg = run("figure fig2 --m 0 --M 1 --s 0.5 --alpha 0.4 --format svg");
    REQUIRE(svg.exit_code == 0);
    CHECK(svg.out.rfind("<svg", 0) == 0);
}

TEST_CASE("malformed flags exit with the usage code", "[cli]") {
    CHECK(run("bound --theorem 7 --alpha 1").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("bound --theorem 1 --alpha -2 --m 0 --M 1 --s 0.5").exit_code == 2);
    CHECK(run("solve --alpha 1").exit_code == 2); // missing --source
    CHECK(run("figure fig1a --format pdf").exit_code == 2);
}

TEST_CASE("the tolerance env var reaches the verify suite", "[cli]") {
    const auto r = run("verify --alpha 1 --m 0 --M 1 --s 0.5 "
                       "--n-cells 200 --n-grid 200 --n-samples 5",
                       "ROBIN_ROD_TOL=0.01 ");
    REQUIRE(r.exit_code == 0);
    // the scan tolerance floor is the overridden default
    CHECK(r.out.find("tol=0.01") != std::string::npos);
}

TEST_CASE("verify --all --out writes the convergence table", "[cli]") {
    const std::string path = "/tmp/robin_rod_convergence.csv";
    const auto r = run("verify --all --alpha 1 --m 0 --M 1 --s 0.5 "
                       "--n-cells 200 --n-grid 200 --n-samples 5 --out " + path);
    REQUIRE(r.exit_code == 0);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "n,sup_norm,osc_diff,l1_dist,envelope");
}
