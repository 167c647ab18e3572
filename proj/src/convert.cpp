#include "symcube/convert.hpp"

#include <algorithm>
#include <stdexcept>

namespace symcube {

Partition cube_to_partition(const LatinCube& cube) {
    if (const Report latin = is_latin(cube); !latin.ok())
        throw std::invalid_argument("cube_to_partition: not latin: " + latin.joined());
    if (const Report sym = is_symmetric(cube); !sym.ok())
        throw std::invalid_argument("cube_to_partition: not symmetric: " + sym.joined());

    const int n = cube.order();
    Partition partition;
    partition.order = n;
    partition.classes.resize(static_cast<std::size_t>(n) * n);
    auto cls = [&](int symbol) -> ParallelClass& {
        return partition.classes[static_cast<std::size_t>(symbol) - 1];
    };

    for (int i = 1; i <= n; ++i) {
        cls(cube.at(i, i, i)).blocks.push_back({i});
        for (int j = i + 1; j <= n; ++j) {
            cls(cube.at(i, i, j)).blocks.push_back({i, j});
            cls(cube.at(i, j, i)).blocks.push_back({i, j});
            cls(cube.at(i, j, j)).blocks.push_back({i, j});
            for (int l = j + 1; l <= n; ++l) {
                cls(cube.at(i, j, l)).blocks.push_back({i, j, l});
                cls(cube.at(j, i, l)).blocks.push_back({i, j, l});
            }
        }
    }
    for (auto& c : partition.classes) c.normalize();
    return partition;
}

LatinCube partition_to_cube(const Partition& partition) {
    if (const Report valid = validate_partition(partition); !valid.ok())
        throw std::invalid_argument("partition_to_cube: invalid partition: " + valid.joined());

    const int n = partition.order;
    std::vector<int> cells(static_cast<std::size_t>(n) * n * n, 0);
    auto put = [&](int i, int j, int l, int symbol) {
        cells[static_cast<std::size_t>(((i - 1) * n + (j - 1)) * n + (l - 1))] = symbol;
    };

    // Class indices double as symbols. validate_partition guarantees every
    // pair collects exactly three distinct indices and every triple two, in
    // ascending order because classes are scanned in index order.
    std::map<PointSet, std::vector<int>> colors;
    for (std::size_t c = 0; c < partition.classes.size(); ++c)
        for (const auto& block : partition.classes[c].blocks) {
            PointSet sorted = block;
            std::sort(sorted.begin(), sorted.end());
            colors[sorted].push_back(static_cast<int>(c) + 1);
        }

    for (const auto& [block, symbols] : colors) {
        if (block.size() == 1) {
            const int i = block[0];
            put(i, i, i, symbols.at(0));
        } else if (block.size() == 2) {
            const int i = block[0], j = block[1];
            put(i, i, j, symbols.at(0));
            put(j, j, i, symbols.at(0));
            put(i, j, i, symbols.at(1));
            put(j, i, j, symbols.at(1));
            put(i, j, j, symbols.at(2));
            put(j, i, i, symbols.at(2));
        } else {
            const int i = block[0], j = block[1], l = block[2];
            put(i, j, l, symbols.at(0));
            put(j, l, i, symbols.at(0));
            put(l, i, j, symbols.at(0));
            put(i, l, j, symbols.at(1));
            put(l, j, i, symbols.at(1));
            put(j, i, l, symbols.at(1));
        }
    }
    return LatinCube(n, std::move(cells));
}

}  // namespace symcube
