#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symcube/blocks.hpp"
#include "symcube/report.hpp"

namespace symcube {

enum class VertexRole : std::uint8_t {
    Generic,
    SourceHub,  // sigma
    SinkHub,    // tau
    SplitNode,  // v_i
    BlockNode,  // one occurrence of a block inside split i
    ClassNode,  // all occurrences of one (r,S) shape
};

struct NetVertex {
    VertexRole role = VertexRole::Generic;
    int split_index = 0;  // SplitNode / BlockNode
    Block block;          // BlockNode: the block; ClassNode: (r,S) as a block
    std::string label() const;
};

struct NetEdge {
    int tail = 0;
    int head = 0;
    long long numerator = 0;  // value = numerator / denominator, always >= 0
};

// A digraph carrying an exact-rational edge valuation with one shared
// denominator. Parallel edges are permitted; edges are identified by index.
struct FlowNetwork {
    long long denominator = 1;
    std::vector<NetVertex> vertices;
    std::vector<NetEdge> edges;

    int add_vertex(NetVertex v = {});
    std::size_t add_edge(int tail, int head, long long numerator);

    long long value_floor(std::size_t edge) const;
    long long value_ceil(std::size_t edge) const;
    bool integral(std::size_t edge) const;

    // Sum of incoming numerators per vertex (outgoing sums must match when
    // the valuation is a circulation).
    std::vector<long long> in_numerators() const;
    std::vector<long long> out_numerators() const;
};

// Conservation check: at every vertex the incoming and outgoing numerator
// sums agree exactly. The report lists each violating vertex with its
// imbalance.
Report check_conservation(const FlowNetwork& net);

// An integer valuation aligned with a network's edge list.
struct IntegralCirculation {
    std::vector<long long> values;
};

// Recheck that `g` rounds `net`: per-edge floor/ceil bounds plus exact
// conservation.
Report validate_rounding(const FlowNetwork& net, const IntegralCirculation& g);

// Rounds a rational circulation to an integer one with every edge moved to
// its floor or ceiling. Works by fixing the floors as lower bounds and
// routing the leftover fractional mass as a max-flow feasibility problem
// (deterministic shortest-augmenting-path search in edge-insertion order).
// Existence is guaranteed for every conserving input; a conservation failure
// is rejected with the offending report text.
IntegralCirculation round_integral(const FlowNetwork& net);

}  // namespace symcube
