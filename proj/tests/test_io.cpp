#include <doctest.h>

#include <sstream>

#include "fixture_data.hpp"
#include "symcube/io.hpp"
#include "symcube/lifting.hpp"

using namespace symcube;
using symcube::testing::load_fixture;
using symcube::testing::order2_example;

TEST_SUITE_BEGIN("io");

TEST_CASE("grid writer emits the canonical layout") {
    const std::string text = cube_to_string(order2_example(), "grid");
    CHECK(text == "order 2\n\n1 2\n3 4\n\n4 3\n2 1\n");
}

TEST_CASE("json writer emits one canonical line") {
    const std::string text = cube_to_string(LatinCube(1, {1}), "json");
    CHECK(text == "{\"order\":1,\"cells\":[[[1]]],\"symbols\":1}\n");
    CHECK_THROWS_AS(cube_to_string(LatinCube(1, {1}), "yaml"), std::invalid_argument);
}

TEST_CASE("both formats round-trip constructed cubes") {
    for (int order : {1, 2, 5, 6}) {
        const LatinCube cube = construct_cube(order);
        for (const char* format : {"grid", "json"}) {
            std::istringstream in(cube_to_string(cube, format));
            const LatinCube back = read_cube_auto(in);
            REQUIRE(back.order() == order);
            CHECK(std::vector<int>(back.raw().begin(), back.raw().end()) ==
                  std::vector<int>(cube.raw().begin(), cube.raw().end()));
        }
    }
}

TEST_CASE("grid -> json -> grid is byte-identical after normalization") {
    // A sloppily formatted but valid grid file.
    const std::string sloppy = "order  2\n1 2\n3 4\n\n\n4 3\n   2 1\n";
    std::istringstream first(sloppy);
    const LatinCube cube = read_cube_grid(first);
    const std::string normalized = cube_to_string(cube, "grid");

    std::istringstream as_json_in(cube_to_string(cube, "json"));
    const LatinCube through_json = read_cube_json(as_json_in);
    CHECK(cube_to_string(through_json, "grid") == normalized);

    std::istringstream again(normalized);
    CHECK(cube_to_string(read_cube_grid(again), "grid") == normalized);
}

TEST_CASE("the shipped fixtures parse and verify") {
    for (const char* name : {"order2.grid", "order5.grid", "order6.grid", "order8.grid"}) {
        const LatinCube cube = load_fixture(name);
        INFO(name);
        CHECK(is_latin(cube).ok());
        CHECK(is_symmetric(cube).ok());
    }
    CHECK(load_fixture("order2.grid").raw().size() == 8);
    CHECK(load_fixture("order6.grid").order() == 6);
    CHECK(load_fixture("order8.grid").order() == 8);
}

TEST_CASE("grid parse errors carry locations") {
    auto expect_error = [](const std::string& text, const std::string& needle) {
        std::istringstream in(text);
        try {
            read_cube_grid(in);
            FAIL("expected a parse error for: ", text);
        } catch (const ParseError& err) {
            const std::string message = err.what();
            INFO("message: ", message);
            CHECK(message.find(needle) != std::string::npos);
        }
    };
    expect_error("", "empty input");
    expect_error("cube 2", "expected header");
    expect_error("order x", "expected the order");
    expect_error("order 0", "order must be >= 1");
    expect_error("order 2\n1 2 3 4 1 2 3", "expected 8 symbols");
    expect_error("order 2\n1 2 3 4 4 3 2 1 1", "trailing");
    expect_error("order 2\n1 2 3 9 1 2 3 4", "outside 1..4");
    expect_error("order 2\n1 2 3 4 4 3 2 8.5", "expected a symbol");

    std::istringstream in("order 2\n\n1 2\n3 4\n\n4 3\n2 x\n");
    try {
        read_cube_grid(in);
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(err.line == 7);
        CHECK(err.column == 3);
    }
}

TEST_CASE("json parse errors are rejected with exit-worthy diagnostics") {
    auto expect_error = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_cube_json(in), ParseError);
    };
    expect_error("{");
    expect_error("[1,2]");
    expect_error("{\"order\":1}");
    expect_error("{\"order\":1,\"cells\":[[[2]]]}");
    expect_error("{\"order\":1,\"cells\":[[[1]]],\"symbols\":4}");
    expect_error("{\"order\":2,\"cells\":[[[1]]]}");
    expect_error("{\"order\":1,\"cells\":[[[1.5]]]}");
}

TEST_CASE("format autodetection") {
    std::istringstream grid("order 1\n\n1\n");
    CHECK(read_cube_auto(grid).order() == 1);
    std::istringstream json("  {\"order\":1,\"cells\":[[[1]]]}");
    CHECK(read_cube_auto(json).order() == 1);
    std::istringstream blank("   \n ");
    CHECK_THROWS_AS(read_cube_auto(blank), ParseError);
}

TEST_SUITE_END();
