#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcube/report.hpp"

namespace symcube {

// 1-based cell coordinates (row, column, layer).
struct Cell {
    int i = 0, j = 0, l = 0;
    bool operator==(const Cell&) const = default;
    std::string str() const;
};

// An n x n x n array over symbols {1..n^2}, immutable after construction.
// at(i,j,l) reads row i, column j, layer l, all 1-based.
class LatinCube {
  public:
    // `cells` is row-major over (i,j,l); throws std::invalid_argument on a
    // size mismatch or an out-of-range symbol.
    LatinCube(int order, std::vector<int> cells);

    int order() const { return order_; }
    int symbols() const { return order_ * order_; }

    int at(int i, int j, int l) const {
        return cells_[static_cast<std::size_t>(
            ((i - 1) * order_ + (j - 1)) * order_ + (l - 1))];
    }
    int at(const Cell& c) const { return at(c.i, c.j, c.l); }

    std::span<const int> raw() const { return cells_; }

    // The n x n layer obtained by fixing coordinate `axis` (1, 2 or 3) at
    // `index`; row-major over the two remaining coordinates in order.
    std::vector<int> layer(int axis, int index) const;

  private:
    int order_;
    std::vector<int> cells_;
};

// Symmetry orbit of a cell: the cells forced to share its symbol.
//   * three distinct coordinates: the 3-cycle {(i,j,l),(j,l,i),(l,i,j)};
//   * exactly two equal: the pair {(i,i,j),(j,j,i)} / {(i,j,i),(j,i,j)} /
//     {(i,j,j),(j,i,i)};
//   * diagonal cells are alone.
std::vector<Cell> symmetry_orbit(int n, Cell c);

// Every layer parallel to every face must carry each of the n^2 symbols
// exactly once. The report names offending (axis, layer, symbol) triples,
// capped at 16 entries. The default entry point uses OpenMP when available;
// the _serial variant is the reference implementation.
Report is_latin(const LatinCube& cube);
Report is_latin_serial(const LatinCube& cube);

// The two symmetry conditions: constant symbols on both 3-cycles of every
// distinct index triple, and the three pair identities for every i != j.
// The report names the first violated identities, capped at 16.
Report is_symmetric(const LatinCube& cube);
Report is_symmetric_serial(const LatinCube& cube);

// Raised when symmetry forces one cell to carry two different symbols.
struct CubeConflict : std::runtime_error {
    CubeConflict(Cell a, Cell b, int have, int want);
    Cell first, second;
    int existing, incoming;
};

// A cube under construction: 0 marks an undetermined cell. Writing a cell
// propagates its symbol across the whole symmetry orbit.
class PartialCube {
  public:
    explicit PartialCube(int order);

    int order() const { return order_; }
    int at(int i, int j, int l) const {
        return cells_[static_cast<std::size_t>(
            ((i - 1) * order_ + (j - 1)) * order_ + (l - 1))];
    }
    int at(const Cell& c) const { return at(c.i, c.j, c.l); }

    // Throws CubeConflict if a cell in the orbit already holds a different
    // symbol; throws std::invalid_argument on an out-of-range symbol.
    void assign_orbit(Cell c, int symbol);

    std::size_t undetermined() const { return unset_; }
    bool complete() const { return unset_ == 0; }

    // Throws std::logic_error while any cell is undetermined.
    LatinCube freeze() const;

  private:
    int order_;
    std::vector<int> cells_;
    std::size_t unset_;
};

// Propagates one full layer (axis fixed at `index`) into `partial`,
// symmetry-completing every orbit the layer touches. The layer is row-major
// as produced by LatinCube::layer. Throws CubeConflict on disagreement.
void merge_layer(PartialCube& partial, int axis, int index, std::span<const int> layer);

// Orbit propagation of a single candidate layer starting from a blank cube.
PartialCube symmetric_completion(int order, int axis, int index, std::span<const int> layer);

}  // namespace symcube
