#pragma once

#include "symcube/blocks.hpp"
#include "symcube/cube.hpp"

namespace symcube {

// Reads a symmetric cube off as n^2 parallel classes, one per symbol:
// symbol c collects {i} when cell (i,i,i) holds c, one copy of {i,j} per
// pair orbit carrying c, and one copy of {i,j,l} per 3-cycle carrying c.
// Rejects cubes failing is_latin or is_symmetric (std::invalid_argument with
// the verifier report).
Partition cube_to_partition(const LatinCube& cube);

// Fills a cube from a partition: the diagonal takes each singleton's class
// index, and for every pair/triple the class indices are assigned to the
// symmetry orbits in ascending order (smallest index to the (i,i,j) orbit,
// respectively to the (i,j,l) cycle). Rejects partitions failing
// validate_partition.
LatinCube partition_to_cube(const Partition& partition);

}  // namespace symcube
