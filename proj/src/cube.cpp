#include "symcube/cube.hpp"

#include <algorithm>

namespace symcube {

std::string Cell::str() const {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) + ")";
}

LatinCube::LatinCube(int order, std::vector<int> cells) : order_(order), cells_(std::move(cells)) {
    if (order < 1) throw std::invalid_argument("LatinCube: order must be >= 1");
    const auto want = static_cast<std::size_t>(order) * order * order;
    if (cells_.size() != want)
        throw std::invalid_argument("LatinCube: expected " + std::to_string(want) +
                                    " cells, got " + std::to_string(cells_.size()));
    const int max_symbol = order * order;
    for (std::size_t k = 0; k < cells_.size(); ++k)
        if (cells_[k] < 1 || cells_[k] > max_symbol)
            throw std::invalid_argument("LatinCube: symbol " + std::to_string(cells_[k]) +
                                        " at flat index " + std::to_string(k) +
                                        " outside 1.." + std::to_string(max_symbol));
}

std::vector<int> LatinCube::layer(int axis, int index) const {
    if (axis < 1 || axis > 3) throw std::invalid_argument("layer: axis must be 1, 2 or 3");
    if (index < 1 || index > order_) throw std::invalid_argument("layer: index out of range");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(order_) * order_);
    for (int u = 1; u <= order_; ++u)
        for (int v = 1; v <= order_; ++v) {
            switch (axis) {
                case 1: out.push_back(at(index, u, v)); break;
                case 2: out.push_back(at(u, index, v)); break;
                default: out.push_back(at(u, v, index)); break;
            }
        }
    return out;
}

std::vector<Cell> symmetry_orbit(int n, Cell c) {
    if (c.i < 1 || c.i > n || c.j < 1 || c.j > n || c.l < 1 || c.l > n)
        throw std::invalid_argument("symmetry_orbit: cell out of range");
    const auto [i, j, l] = c;
    if (i == j && j == l) return {c};
    if (i != j && j != l && i != l) return {c, {j, l, i}, {l, i, j}};
    if (i == j) return {c, {l, l, i}};   // (i,i,l) <-> (l,l,i)
    if (i == l) return {c, {j, i, j}};   // (i,j,i) <-> (j,i,j)
    return {c, {j, i, i}};               // (i,j,j) <-> (j,i,i)
}

namespace {

// One layer's latin check; violations go into `rb` in scan order.
void check_layer(const LatinCube& cube, int axis, int index, ReportBuilder& rb) {
    const int n = cube.order();
    std::vector<char> seen(static_cast<std::size_t>(n) * n + 1, 0);
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v) {
            int s;
            switch (axis) {
                case 1: s = cube.at(index, u, v); break;
                case 2: s = cube.at(u, index, v); break;
                default: s = cube.at(u, v, index); break;
            }
            if (seen[static_cast<std::size_t>(s)]) {
                rb.add("axis " + std::to_string(axis) + " layer " + std::to_string(index) +
                       ": symbol " + std::to_string(s) + " repeats");
            }
            seen[static_cast<std::size_t>(s)] = 1;
        }
}

constexpr std::size_t kVerifierCap = 16;

Report latin_check(const LatinCube& cube, bool parallel) {
    const int n = cube.order();
    const int tasks = 3 * n;
    std::vector<Report> partial(static_cast<std::size_t>(tasks));

    auto run = [&](int t) {
        ReportBuilder rb(kVerifierCap);
        check_layer(cube, t / n + 1, t % n + 1, rb);
        partial[static_cast<std::size_t>(t)] = rb.take();
    };

    if (parallel) {
#ifdef _OPENMP
        #pragma omp parallel for schedule(static)
        for (int t = 0; t < tasks; ++t) run(t);
#else
        parallel = false;
#endif
    }
    if (!parallel)
        for (int t = 0; t < tasks; ++t) run(t);

    ReportBuilder out(kVerifierCap);
    for (const auto& r : partial) out.merge(r);
    return out.take();
}

void check_symmetry_row(const LatinCube& cube, int i, ReportBuilder& rb) {
    const int n = cube.order();
    auto expect = [&](Cell a, Cell b) {
        const int x = cube.at(a), y = cube.at(b);
        if (x != y)
            rb.add("L" + a.str() + "=" + std::to_string(x) + " != L" + b.str() + "=" +
                   std::to_string(y));
    };
    for (int j = i + 1; j <= n; ++j) {
        expect({i, i, j}, {j, j, i});
        expect({i, j, i}, {j, i, j});
        expect({i, j, j}, {j, i, i});
        for (int l = j + 1; l <= n; ++l) {
            expect({i, j, l}, {j, l, i});
            expect({i, j, l}, {l, i, j});
            expect({i, l, j}, {l, j, i});
            expect({i, l, j}, {j, i, l});
        }
    }
}

Report symmetric_check(const LatinCube& cube, bool parallel) {
    const int n = cube.order();
    std::vector<Report> partial(static_cast<std::size_t>(n));

    auto run = [&](int i) {
        ReportBuilder rb(kVerifierCap);
        check_symmetry_row(cube, i + 1, rb);
        partial[static_cast<std::size_t>(i)] = rb.take();
    };

    if (parallel) {
#ifdef _OPENMP
        #pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) run(i);
#else
        parallel = false;
#endif
    }
    if (!parallel)
        for (int i = 0; i < n; ++i) run(i);

    ReportBuilder out(kVerifierCap);
    for (const auto& r : partial) out.merge(r);
    return out.take();
}

}  // namespace

Report is_latin(const LatinCube& cube) { return latin_check(cube, true); }
Report is_latin_serial(const LatinCube& cube) { return latin_check(cube, false); }

Report is_symmetric(const LatinCube& cube) { return symmetric_check(cube, true); }
Report is_symmetric_serial(const LatinCube& cube) { return symmetric_check(cube, false); }

CubeConflict::CubeConflict(Cell a, Cell b, int have, int want)
    : std::runtime_error("cell " + b.str() + " is forced to " + std::to_string(have) +
                         " by cell " + a.str() + " but receives " + std::to_string(want)),
      first(a),
      second(b),
      existing(have),
      incoming(want) {}

PartialCube::PartialCube(int order)
    : order_(order),
      cells_(static_cast<std::size_t>(order) * order * order, 0),
      unset_(cells_.size()) {
    if (order < 1) throw std::invalid_argument("PartialCube: order must be >= 1");
}

void PartialCube::assign_orbit(Cell c, int symbol) {
    if (symbol < 1 || symbol > order_ * order_)
        throw std::invalid_argument("assign_orbit: symbol out of range");
    for (const Cell& t : symmetry_orbit(order_, c)) {
        auto& slot = cells_[static_cast<std::size_t>(
            ((t.i - 1) * order_ + (t.j - 1)) * order_ + (t.l - 1))];
        if (slot == 0) {
            slot = symbol;
            --unset_;
        } else if (slot != symbol) {
            throw CubeConflict(c, t, slot, symbol);
        }
    }
}

LatinCube PartialCube::freeze() const {
    if (!complete())
        throw std::logic_error("PartialCube: " + std::to_string(unset_) +
                               " cells still undetermined");
    return LatinCube(order_, cells_);
}

void merge_layer(PartialCube& partial, int axis, int index, std::span<const int> layer) {
    const int n = partial.order();
    if (axis < 1 || axis > 3) throw std::invalid_argument("merge_layer: axis must be 1, 2 or 3");
    if (index < 1 || index > n) throw std::invalid_argument("merge_layer: index out of range");
    if (layer.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("merge_layer: layer has wrong size");
    std::size_t k = 0;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v, ++k) {
            Cell c;
            switch (axis) {
                case 1: c = {index, u, v}; break;
                case 2: c = {u, index, v}; break;
                default: c = {u, v, index}; break;
            }
            partial.assign_orbit(c, layer[k]);
        }
}

PartialCube symmetric_completion(int order, int axis, int index, std::span<const int> layer) {
    PartialCube partial(order);
    merge_layer(partial, axis, index, layer);
    return partial;
}

}  // namespace symcube
