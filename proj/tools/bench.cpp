// Times the OpenMP verifier kernels against their serial references on
// freshly constructed cubes, checking along the way that both variants
// agree. Orders and repeat count are adjustable from the command line.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "symcube/blocks.hpp"
#include "symcube/convert.hpp"
#include "symcube/cube.hpp"
#include "symcube/lifting.hpp"

using namespace symcube;

namespace {

double time_ms(int repeat, const auto& fn) {
    fn();  // warm-up, also forces lazy page-ins
    const auto start = std::chrono::steady_clock::now();
    for (int k = 0; k < repeat; ++k) fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / repeat;
}

// Reconstructs the ground-n split family a partition corresponds to, which
// is the shape the profile kernel sees at the end of a construction.
SplitFamily family_of(const Partition& partition) {
    SplitFamily family;
    family.order = partition.order;
    family.ground = partition.order;
    family.splits.resize(partition.classes.size());
    for (std::size_t c = 0; c < partition.classes.size(); ++c)
        for (const auto& set : partition.classes[c].blocks) {
            std::vector<int> others;
            int ones = 0;
            for (int p : set) {
                if (p == 1)
                    ones = 1;
                else
                    others.push_back(p);
            }
            family.splits[c].add(Block::make(ones, others));
        }
    return family;
}

struct Row {
    const char* kernel;
    double serial_ms;
    double parallel_ms;
    bool agree;
};

void print_row(int order, const Row& row) {
    std::printf("%6d  %-16s %12.3f %12.3f %9.2fx  %s\n", order, row.kernel, row.serial_ms,
                row.parallel_ms, row.serial_ms / row.parallel_ms, row.agree ? "agree" : "DISAGREE");
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> orders = {12, 24, 36, 48};
    int repeat = 5;
    for (int k = 1; k < argc; ++k) {
        const std::string arg = argv[k];
        if (arg == "--repeat" && k + 1 < argc) {
            repeat = std::atoi(argv[++k]);
        } else if (arg == "--orders" && k + 1 < argc) {
            orders.clear();
            std::string list = argv[++k];
            for (std::size_t pos = 0; pos < list.size();) {
                auto comma = list.find(',', pos);
                if (comma == std::string::npos) comma = list.size();
                orders.push_back(std::atoi(list.substr(pos, comma - pos).c_str()));
                pos = comma + 1;
            }
        } else {
            std::fprintf(stderr, "usage: %s [--orders a,b,c] [--repeat N]\n", argv[0]);
            return 2;
        }
    }

    std::printf("%6s  %-16s %12s %12s %10s\n", "order", "kernel", "serial ms", "parallel ms",
                "speedup");
    bool all_agree = true;
    for (int order : orders) {
        const auto built_at = std::chrono::steady_clock::now();
        const Partition partition = construct_partition(order);
        const LatinCube cube = partition_to_cube(partition);
        const SplitFamily family = family_of(partition);
        const double construct_ms = std::chrono::duration<double, std::milli>(
                                        std::chrono::steady_clock::now() - built_at)
                                        .count();
        std::printf("%6d  %-16s %12.3f\n", order, "construct", construct_ms);

        const Row rows[] = {
            {"latin", time_ms(repeat, [&] { is_latin_serial(cube); }),
             time_ms(repeat, [&] { is_latin(cube); }),
             is_latin_serial(cube).ok() == is_latin(cube).ok()},
            {"symmetric", time_ms(repeat, [&] { is_symmetric_serial(cube); }),
             time_ms(repeat, [&] { is_symmetric(cube); }),
             is_symmetric_serial(cube).ok() == is_symmetric(cube).ok()},
            {"profile", time_ms(repeat, [&] { check_family_profile_serial(family); }),
             time_ms(repeat, [&] { check_family_profile(family); }),
             check_family_profile_serial(family).ok() == check_family_profile(family).ok()},
        };
        for (const Row& row : rows) {
            print_row(order, row);
            all_agree = all_agree && row.agree;
        }
    }
    return all_agree ? 0 : 1;
}
