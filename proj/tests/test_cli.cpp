#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "fixture_data.hpp"

using symcube::testing::fixture_path;

TEST_SUITE_BEGIN("cli");

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout and stderr interleaved
};

// Runs the CLI under the shell; SYMCUBE_BIN is injected by the test harness.
RunResult run(const std::string& args) {
    const char* bin = std::getenv("SYMCUBE_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "SYMCUBE_BIN must point at the CLI binary");
    const std::string command = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string temp_file(const std::string& name) {
    return "/tmp/symcube-test-" + std::to_string(getpid()) + "-" + name;
}

}  // namespace

TEST_CASE("construct emits a verifiable cube") {
    const std::string path = temp_file("c5.grid");
    const RunResult built = run("construct --order 5 --format grid --output " + path);
    REQUIRE(built.exit_code == 0);
    const RunResult checked = run("verify " + path);
    CHECK(checked.exit_code == 0);
    CHECK(checked.output.find("latin: ok") != std::string::npos);
    CHECK(checked.output.find("symmetric: ok") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("construct reports infeasible orders on exit code 2") {
    const RunResult r = run("construct --order 3");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("order 3 is infeasible") != std::string::npos);
}

TEST_CASE("construct --order 1 --format json prints the one-cell cube") {
    const RunResult r = run("construct --order 1 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "{\"order\":1,\"cells\":[[[1]]],\"symbols\":1}\n");
}

TEST_CASE("seeds come from the flag or the environment") {
    const RunResult flagged = run("construct --order 5 --seed 9");
    REQUIRE(flagged.exit_code == 0);
    const char* bin = std::getenv("SYMCUBE_BIN");
    REQUIRE(bin != nullptr);
    FILE* pipe = popen(("SYMCUBE_SEED=9 " + std::string(bin) + " construct --order 5").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string via_env;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) via_env.append(buffer, got);
    pclose(pipe);
    CHECK(flagged.output == via_env);

    // And a different seed yields a valid cube as well.
    const RunResult other = run("construct --order 5 --seed 1 | " +
                                std::string(bin) + " verify -");
    CHECK(other.exit_code == 0);
}

TEST_CASE("solve-system prints triples or the infeasibility reason") {
    const RunResult five = run("solve-system 5");
    REQUIRE(five.exit_code == 0);
    CHECK(five.output.find("0 1 1\n") == 0);
    CHECK(five.output.rfind("1 2 0\n") == five.output.size() - 6);
    int lines = 0;
    for (char c : five.output) lines += c == '\n';
    CHECK(lines == 25);

    const RunResult one = run("solve-system 1");
    CHECK(one.exit_code == 0);
    CHECK(one.output == "1 0 0\n");

    const RunResult seven = run("solve-system 7");
    CHECK(seven.exit_code == 2);
    CHECK(seven.output.find("infeasible") != std::string::npos);
}

TEST_CASE("info prints one feasibility line") {
    CHECK(run("info 6").output == "feasible\n");
    CHECK(run("info 6").exit_code == 0);
    CHECK(run("info 3").output == "infeasible: exceptional order 3\n");
    CHECK(run("info 3").exit_code == 0);
    CHECK(run("info 10").output == "infeasible: order ≡ 1 (mod 3)\n");
    CHECK(run("info 10").exit_code == 0);
}

TEST_CASE("verify accepts the shipped fixtures and flags corruption") {
    const RunResult good = run("verify " + fixture_path("order8.grid") + " --deep");
    CHECK(good.exit_code == 0);

    // Perturb one cell of the order-6 fixture.
    const symcube::LatinCube cube = symcube::testing::load_fixture("order6.grid");
    std::vector<int> cells(cube.raw().begin(), cube.raw().end());
    cells[17] = cells[17] % 36 + 1;
    const std::string path = temp_file("bad6.grid");
    {
        std::ofstream out(path);
        symcube::write_cube_grid(out, symcube::LatinCube(6, cells));
    }
    const RunResult bad = run("verify " + path);
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("FAILED") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("verify exits 3 on unreadable input") {
    const std::string path = temp_file("empty.grid");
    { std::ofstream out(path); }
    const RunResult empty = run("verify " + path);
    CHECK(empty.exit_code == 3);
    CHECK(empty.output.find("parse error") != std::string::npos);
    std::remove(path.c_str());

    const RunResult missing = run("verify /nonexistent/nowhere.grid");
    CHECK(missing.exit_code == 3);
}

TEST_CASE("verify reads stdin when the path is a dash") {
    const char* bin = std::getenv("SYMCUBE_BIN");
    REQUIRE(bin != nullptr);
    const std::string command =
        std::string(bin) + " construct --order 2 | " + bin + " verify - --deep 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    const int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(output.find("latin: ok") != std::string::npos);
    // order 2 is small enough for the exhaustive cross-checks
    CHECK(output.find("oracle: ok") != std::string::npos);
}

TEST_CASE("construct and verify round-trip through both formats") {
    for (int order : {1, 2, 6, 9, 12}) {
        for (const char* format : {"grid", "json"}) {
            const std::string path =
                temp_file("rt" + std::to_string(order) + "." + format);
            const RunResult built = run("construct --order " + std::to_string(order) +
                                        " --format " + format + " --output " + path);
            REQUIRE(built.exit_code == 0);
            const RunResult checked = run("verify " + path);
            INFO("order ", order, " format ", format, ": ", checked.output);
            CHECK(checked.exit_code == 0);
            std::remove(path.c_str());
        }
    }
}

TEST_CASE("construct exits 3 when the output path cannot be written") {
    const RunResult r = run("construct --order 2 --output /nonexistent-dir/cube.grid");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("cannot write") != std::string::npos);
}

TEST_CASE("usage errors exit with the parse code") {
    CHECK(run("construct").exit_code == 3);         // missing --order
    CHECK(run("frobnicate").exit_code == 3);        // unknown subcommand
    CHECK(run("info 0").exit_code == 3);            // rejected by validation
    CHECK(run("").exit_code == 3);                  // subcommand required
}

TEST_SUITE_END();
