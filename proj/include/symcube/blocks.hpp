#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "symcube/report.hpp"

namespace symcube {

// Exact binomial coefficient for k <= 3, valid without overflow for
// n up to 2^20. Returns 0 for n < k.
long long binom(long long n, int k);

// Target multiplicity coefficient: blocks of total size 0,1,2,3 are required
// 0, 1, 3 and 2 times respectively in the block system on X.
// Throws std::domain_error when r + s_size is outside 0..3.
int a_coeff(int r, int s_size);

// A block {1^r} u S: r copies of point 1 plus a set S of distinct points >= 2.
// Canonical form keeps S sorted ascending; unused slots stay 0, so the
// defaulted comparison orders blocks lexicographically by (r, S).
struct Block {
    int ones = 0;                 // 0..3
    std::array<int, 3> others{};  // sorted ascending, points >= 2
    int others_count = 0;

    int size() const { return ones + others_count; }

    // Multiplicity of `point` inside the block (r for point 1, else 0/1).
    int mu(int point) const;
    bool contains(int point) const { return mu(point) > 0; }

    // Canonicalizing constructor; throws std::invalid_argument on a point < 2
    // in `others`, a repeated point, r outside 0..3, or total size > 3.
    static Block make(int ones, std::span<const int> others);
    static Block make(int ones, std::initializer_list<int> others);

    // The block with one 1 replaced by `point` (which must exceed every
    // member of S). Requires ones >= 1.
    Block promoted(int point) const;

    // The block as a plain point set; requires ones <= 1 (no repeats).
    std::vector<int> as_set() const;

    std::string str() const;

    auto operator<=>(const Block&) const = default;
};

// A split: a multiset of blocks, keyed by canonical block with integer
// multiplicities. Union of splits adds multiplicities.
struct Split {
    std::map<Block, int> counts;

    // Throws std::invalid_argument for the empty block or mult <= 0.
    void add(const Block& block, int mult = 1);
    // Throws std::invalid_argument if the block is absent.
    void remove_one(const Block& block);

    int multiplicity(const Block& block) const;

    // Total multiplicity of `point` across all blocks of the split.
    long long mu_point(int point) const;

    // Sum over blocks of |block| * multiplicity.
    long long point_mass() const;

    bool operator==(const Split&) const = default;
};

// The indexed family F_1..F_{n^2} of splits over the ground set {1..ground}.
struct SplitFamily {
    int order = 0;   // n; the family always holds n^2 splits
    int ground = 0;  // blocks draw their points from {1..ground}
    std::vector<Split> splits;

    // Split indices are 1-based to match the construction's bookkeeping.
    long long mu_point(int i, int point) const;

    // Total multiplicity of `block` across the whole family.
    long long mu_block(const Block& block) const;
};

// Checks the stage profile of a family over {1..ground} for order n:
//   * every split carries point 1 exactly n-ground+1 times,
//   * every split carries each point 2..ground exactly once,
//   * every block (r,S) appears a_coeff(r,|S|) * C(n-ground+1, r) times
//     family-wide.
// The report lists every violated condition. The default entry point uses
// OpenMP when available; the _serial variant is the reference implementation.
Report check_family_profile(const SplitFamily& family);
Report check_family_profile_serial(const SplitFamily& family);

// A set of 1..order points, sorted ascending.
using PointSet = std::vector<int>;

// The block system on X = {1..n}: every singleton once, every pair three
// times, every triple twice.
std::map<PointSet, int> target_system(int n);

// A parallel class: pairwise-disjoint sets of size 1..3 covering X exactly.
struct ParallelClass {
    std::vector<PointSet> blocks;  // kept sorted for canonical comparison

    void normalize();
    bool operator==(const ParallelClass&) const = default;
};

struct Partition {
    int order = 0;
    std::vector<ParallelClass> classes;
};

// Full partition check: n^2 classes, each one parallel, and the multiset
// union of all classes equal to target_system(order).
Report validate_partition(const Partition& partition);

std::string pointset_str(const PointSet& set);

}  // namespace symcube
