#pragma once

#include <cstdint>
#include <functional>

#include "symcube/blocks.hpp"
#include "symcube/circulation.hpp"
#include "symcube/cube.hpp"
#include "symcube/equations.hpp"

namespace symcube {

// Seed family at ground 1: split i holds a_i singletons {1}, b_i doubles
// {1^2} and c_i triples {1^3}. Rejects solutions failing validate_solution.
SplitFamily initial_family(const SystemSolution& sol);

// The stage network for one lift. In contracted form all occurrences of one
// block shape inside a split share a single edge v_i -> class(r,S) whose
// integral value counts promoted occurrences; in expanded form every
// occurrence gets its own pass-through block vertex, matching the
// construction's definition verbatim. Both round to the same choices.
struct LiftNetwork {
    FlowNetwork net;
    int order = 0;
    int stage = 0;  // the ground size the source family lives on
    bool contracted = true;
};

// Builds the stage network: unit edges sigma -> v_i, value mu_A(1)/(n-l+1)
// per occurrence towards class nodes, class out-values
// a_coeff(r,|S|) * C(n-l, r-1), and the closing edge tau -> sigma of value
// n^2. Requires stage < order; rejects families failing the stage profile.
LiftNetwork build_lift_network(const SplitFamily& family, bool contracted = true);

// Per split, the block shape whose one occurrence receives the promotion.
struct LiftChoice {
    std::vector<Block> chosen;  // index i-1 -> block of split i
};

// Reads the promotion choices out of a rounding; throws std::invalid_argument
// unless exactly one unit leaves every split node.
LiftChoice extract_choices(const LiftNetwork& lift, const IntegralCirculation& g);

// Applies one lift: in every split one 1 of the chosen block becomes the new
// point stage+1. Also enforces the class-node quota (the number of promoted
// occurrences of shape (r,S) must equal a_coeff(r,|S|) * C(n-l, r-1)).
SplitFamily apply_lift(const SplitFamily& family, const LiftNetwork& lift,
                       const IntegralCirculation& g);

// Everything one stage produced, exposed to observers for auditing.
struct LiftStage {
    int stage = 0;
    const SplitFamily& family;    // before, at ground `stage`
    const LiftNetwork& network;
    const IntegralCirculation& rounding;
    const SplitFamily& lifted;    // after, at ground `stage`+1
};
using StageObserver = std::function<void(const LiftStage&)>;

// Full pipeline: solve the triple system, seed the family, lift through
// grounds 1..order-1 (validating the profile, conservation, the tau in-sum
// n^2 and the rounding at every stage), then read the final splits off as
// parallel classes. A nonzero seed shuffles split order before each stage to
// sample different outputs; seed 0 keeps the canonical order.
// Throws InfeasibleOrder for infeasible orders and std::logic_error if any
// internal stage check fails.
Partition construct_partition(int order, std::uint64_t seed = 0,
                              const StageObserver& observer = {});

// construct_partition followed by the partition-to-cube conversion; the
// result passes is_latin and is_symmetric.
LatinCube construct_cube(int order, std::uint64_t seed = 0);

}  // namespace symcube
