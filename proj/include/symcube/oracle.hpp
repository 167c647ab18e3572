#pragma once

#include <cstddef>
#include <vector>

#include "symcube/circulation.hpp"
#include "symcube/equations.hpp"

namespace symcube {

// Exhaustive search of the triple system for n <= 6, returned with triples
// sorted inside each solution to quotient out index symmetry. An empty list
// certifies infeasibility. Throws std::domain_error beyond the guard.
std::vector<SystemSolution> brute_system(int n, std::size_t cap = 64);

// Backtracking search for a partition of the block system on n points into
// n^2 parallel classes, for n <= 4. Throws std::domain_error beyond the
// guard.
bool brute_partition_exists(int n);

// All integer circulations within the floor/ceil band of `net`, for networks
// with at most 24 fractional edges. Throws std::domain_error beyond the
// guard and std::invalid_argument when `net` is not a circulation.
std::vector<IntegralCirculation> enumerate_roundings(const FlowNetwork& net,
                                                     std::size_t cap = 4096);

}  // namespace symcube
