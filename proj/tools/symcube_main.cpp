// Command-line front end: construct, verify, solve-system, info.
//
// Exit codes: 0 success, 1 verification failed, 2 infeasible order,
// 3 parse or I/O error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "symcube/convert.hpp"
#include "symcube/cube.hpp"
#include "symcube/equations.hpp"
#include "symcube/io.hpp"
#include "symcube/lifting.hpp"
#include "symcube/oracle.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInfeasible = 2;
constexpr int kParseOrIo = 3;

int run_construct(int order, std::uint64_t seed, const std::string& format,
                  const std::string& output) {
    std::string text;
    try {
        text = symcube::cube_to_string(symcube::construct_cube(order, seed), format);
    } catch (const symcube::InfeasibleOrder& err) {
        std::cerr << err.what() << "\n";
        return kInfeasible;
    }
    if (output == "-") {
        std::cout << text;
        return kOk;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) {
        std::cerr << "cannot write '" << output << "'\n";
        return kParseOrIo;
    }
    return kOk;
}

int run_verify(const std::string& input, bool deep) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (input != "-") {
        file.open(input, std::ios::binary);
        if (!file) {
            std::cerr << "cannot read '" << input << "'\n";
            return kParseOrIo;
        }
        in = &file;
    }

    try {
        const symcube::LatinCube cube = symcube::read_cube_auto(*in);
        bool good = true;
        auto show = [&](const char* name, const symcube::Report& report) {
            if (report.ok()) {
                std::cout << name << ": ok\n";
            } else {
                good = false;
                std::cout << name << ": FAILED\n";
                for (const auto& v : report.violations) std::cout << "  " << v << "\n";
                if (report.truncated) std::cout << "  ...\n";
            }
        };
        show("latin", symcube::is_latin(cube));
        show("symmetric", symcube::is_symmetric(cube));
        if (good && deep) {
            const symcube::Partition partition = symcube::cube_to_partition(cube);
            show("partition", symcube::validate_partition(partition));
            const symcube::LatinCube rebuilt = symcube::partition_to_cube(partition);
            show("rebuilt latin", symcube::is_latin(rebuilt));
            show("rebuilt symmetric", symcube::is_symmetric(rebuilt));
            if (cube.order() <= 4) {
                const bool solvable = !symcube::brute_system(cube.order()).empty();
                const bool partitionable = symcube::brute_partition_exists(cube.order());
                if (solvable && partitionable) {
                    std::cout << "oracle: ok\n";
                } else {
                    good = false;
                    std::cout << "oracle: FAILED (exhaustive search disagrees)\n";
                }
            }
        }
        return good ? kOk : kVerifyFailed;
    } catch (const symcube::ParseError& err) {
        std::cerr << "parse error: " << err.what() << "\n";
        return kParseOrIo;
    } catch (const std::invalid_argument& err) {
        std::cerr << "parse error: " << err.what() << "\n";
        return kParseOrIo;
    }
}

int run_solve_system(int order) {
    try {
        const symcube::SystemSolution sol = symcube::solve_system(order);
        std::ostringstream out;
        for (const auto& [a, b, c] : sol.triples) out << a << " " << b << " " << c << "\n";
        std::cout << out.str();
        return kOk;
    } catch (const symcube::InfeasibleOrder& err) {
        std::cerr << err.what() << "\n";
        return kInfeasible;
    }
}

int run_info(int order) {
    const symcube::Feasibility f = symcube::feasible(order);
    if (f.feasible)
        std::cout << "feasible\n";
    else
        std::cout << "infeasible: " << f.summary << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric latin cube construction and verification"};
    app.require_subcommand(1);

    int order = 0;
    std::uint64_t seed = 0;
    std::string format = "grid";
    std::string output = "-";
    std::string input;
    bool deep = false;

    auto* construct = app.add_subcommand("construct", "build a symmetric latin cube");
    construct->add_option("--order", order, "cube order")->required()->check(CLI::PositiveNumber);
    construct->add_option("--seed", seed, "shuffle seed (0 = canonical order)")
        ->envname("SYMCUBE_SEED");
    construct->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"grid", "json"}));
    construct->add_option("--output", output, "output path ('-' for stdout)");

    auto* verify = app.add_subcommand("verify", "check a cube file");
    verify->add_option("input", input, "cube file ('-' for stdin)")->required();
    verify->add_flag("--deep", deep, "also cross-check the partition reading and, for tiny "
                                     "orders, the exhaustive searches");

    auto* solve = app.add_subcommand("solve-system", "print the order's triple system solution");
    solve->add_option("order", order, "order")->required()->check(CLI::PositiveNumber);

    auto* info = app.add_subcommand("info", "report whether an order is feasible");
    info->add_option("order", order, "order")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return err.get_exit_code() == 0 ? kOk : kParseOrIo;
    }

    try {
        if (construct->parsed()) return run_construct(order, seed, format, output);
        if (verify->parsed()) return run_verify(input, deep);
        if (solve->parsed()) return run_solve_system(order);
        return run_info(order);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kParseOrIo;
    }
}
