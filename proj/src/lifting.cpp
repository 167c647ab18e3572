#include "symcube/lifting.hpp"

#include <limits>
#include <random>
#include <stdexcept>

#include "symcube/convert.hpp"

namespace symcube {

SplitFamily initial_family(const SystemSolution& sol) {
    const Report valid = validate_solution(sol);
    if (!valid.ok())
        throw std::invalid_argument("initial_family: invalid solution: " + valid.joined());

    SplitFamily family;
    family.order = sol.order;
    family.ground = 1;
    family.splits.resize(sol.triples.size());
    for (std::size_t i = 0; i < sol.triples.size(); ++i) {
        const auto [a, b, c] = sol.triples[i];
        if (a > 0) family.splits[i].add(Block::make(1, {}), a);
        if (b > 0) family.splits[i].add(Block::make(2, {}), b);
        if (c > 0) family.splits[i].add(Block::make(3, {}), c);
    }
    return family;
}

LiftNetwork build_lift_network(const SplitFamily& family, bool contracted) {
    const int n = family.order;
    const int ell = family.ground;
    if (ell >= n)
        throw std::invalid_argument("build_lift_network: ground must be below the order");
    const Report profile = check_family_profile(family);
    if (!profile.ok())
        throw std::invalid_argument("build_lift_network: family fails the stage profile: " +
                                    profile.joined());

    LiftNetwork lift;
    lift.order = n;
    lift.stage = ell;
    lift.contracted = contracted;
    FlowNetwork& net = lift.net;
    const long long denom = n - ell + 1;
    net.denominator = denom;

    const int sigma = net.add_vertex({VertexRole::SourceHub, 0, {}});
    const int tau = net.add_vertex({VertexRole::SinkHub, 0, {}});

    const int total = static_cast<int>(family.splits.size());
    std::vector<int> split_vertex(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i)
        split_vertex[static_cast<std::size_t>(i)] =
            net.add_vertex({VertexRole::SplitNode, i + 1, {}});

    // Class nodes exist for every admissible shape (r,S) with r >= 1, in
    // lexicographic (r,S) order, whether or not any block currently maps
    // there.
    std::map<Block, int> class_vertex;
    {
        std::vector<int> subset;
        auto visit = [&](auto&& self, int next, int r, int max_size) -> void {
            const Block shape = Block::make(r, subset);
            class_vertex.emplace(shape, 0);
            if (static_cast<int>(subset.size()) == max_size) return;
            for (int p = next; p <= ell; ++p) {
                subset.push_back(p);
                self(self, p + 1, r, max_size);
                subset.pop_back();
            }
        };
        for (int r = 1; r <= 3; ++r) visit(visit, 2, r, 3 - r);
        for (auto& [shape, vertex] : class_vertex)
            vertex = net.add_vertex({VertexRole::ClassNode, 0, shape});
    }

    for (int i = 0; i < total; ++i)
        net.add_edge(sigma, split_vertex[static_cast<std::size_t>(i)], denom);

    for (int i = 0; i < total; ++i) {
        for (const auto& [block, mult] : family.splits[static_cast<std::size_t>(i)].counts) {
            if (block.ones == 0) continue;
            const int target = class_vertex.at(block);
            if (contracted) {
                net.add_edge(split_vertex[static_cast<std::size_t>(i)], target,
                             static_cast<long long>(mult) * block.ones);
            } else {
                for (int occurrence = 0; occurrence < mult; ++occurrence) {
                    const int node = net.add_vertex({VertexRole::BlockNode, i + 1, block});
                    net.add_edge(split_vertex[static_cast<std::size_t>(i)], node, block.ones);
                    net.add_edge(node, target, block.ones);
                }
            }
        }
    }

    for (const auto& [shape, vertex] : class_vertex) {
        const long long out =
            a_coeff(shape.ones, shape.others_count) * binom(n - ell, shape.ones - 1);
        net.add_edge(vertex, tau, out * denom);
    }

    net.add_edge(tau, sigma, static_cast<long long>(n) * n * denom);
    return lift;
}

LiftChoice extract_choices(const LiftNetwork& lift, const IntegralCirculation& g) {
    const FlowNetwork& net = lift.net;
    if (g.values.size() != net.edges.size())
        throw std::invalid_argument("extract_choices: rounding does not match the network");

    const auto total = static_cast<std::size_t>(lift.order) * static_cast<std::size_t>(lift.order);
    std::vector<int> picks(total, 0);
    LiftChoice choice;
    choice.chosen.resize(total);

    const VertexRole middle_head =
        lift.contracted ? VertexRole::ClassNode : VertexRole::BlockNode;
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        const NetVertex& tail = net.vertices[static_cast<std::size_t>(net.edges[e].tail)];
        const NetVertex& head = net.vertices[static_cast<std::size_t>(net.edges[e].head)];
        if (tail.role != VertexRole::SplitNode || head.role != middle_head) continue;
        const long long value = g.values[e];
        if (value == 0) continue;
        if (value != 1)
            throw std::invalid_argument("extract_choices: edge " + tail.label() + " -> " +
                                        head.label() + " carries " + std::to_string(value) +
                                        ", expected 0 or 1");
        const auto i = static_cast<std::size_t>(tail.split_index) - 1;
        picks[i] += 1;
        choice.chosen[i] = head.block;
    }
    for (std::size_t i = 0; i < total; ++i)
        if (picks[i] != 1)
            throw std::invalid_argument("extract_choices: split " + std::to_string(i + 1) +
                                        " selects " + std::to_string(picks[i]) +
                                        " blocks, expected exactly 1");
    return choice;
}

SplitFamily apply_lift(const SplitFamily& family, const LiftNetwork& lift,
                       const IntegralCirculation& g) {
    if (lift.order != family.order || lift.stage != family.ground)
        throw std::invalid_argument("apply_lift: network built for a different family");
    const LiftChoice choice = extract_choices(lift, g);

    const int n = family.order;
    const int ell = family.ground;

    // Class-node quota: promoted occurrences of shape (r,S) must number
    // a_coeff(r,|S|) * C(n-l, r-1) exactly.
    std::map<Block, long long> promoted;
    for (const Block& block : choice.chosen) promoted[block] += 1;
    for (const auto& [shape, count] : promoted) {
        const long long want =
            a_coeff(shape.ones, shape.others_count) * binom(n - ell, shape.ones - 1);
        if (count != want)
            throw std::logic_error("apply_lift: shape " + shape.str() + " promoted " +
                                   std::to_string(count) + " times, expected " +
                                   std::to_string(want));
    }

    SplitFamily next;
    next.order = n;
    next.ground = ell + 1;
    next.splits = family.splits;
    for (std::size_t i = 0; i < next.splits.size(); ++i) {
        const Block& block = choice.chosen[i];
        next.splits[i].remove_one(block);
        next.splits[i].add(block.promoted(ell + 1));
    }
    return next;
}

namespace {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t reject_from =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= reject_from);
    return x % bound;
}

// Fisher-Yates with explicit draws; std::shuffle's output is not pinned down
// across standard libraries.
void shuffle_splits(std::vector<Split>& splits, std::mt19937_64& rng) {
    for (std::size_t i = splits.size(); i > 1; --i)
        std::swap(splits[i - 1], splits[draw_below(rng, i)]);
}

Partition to_parallel_classes(const SplitFamily& family) {
    Partition partition;
    partition.order = family.order;
    partition.classes.reserve(family.splits.size());
    for (const auto& split : family.splits) {
        ParallelClass cls;
        for (const auto& [block, mult] : split.counts) {
            if (block.ones > 1)
                throw std::logic_error("construct: final split still holds " + block.str());
            for (int k = 0; k < mult; ++k) cls.blocks.push_back(block.as_set());
        }
        cls.normalize();
        partition.classes.push_back(std::move(cls));
    }
    return partition;
}

}  // namespace

Partition construct_partition(int order, std::uint64_t seed, const StageObserver& observer) {
    const Feasibility f = feasible(order);
    if (!f.feasible) throw InfeasibleOrder(order, f);

    SplitFamily family = initial_family(solve_system(order));
    std::mt19937_64 rng(seed);

    const long long want_tau = static_cast<long long>(order) * order;
    for (int ell = 1; ell < order; ++ell) {
        if (seed != 0) shuffle_splits(family.splits, rng);

        // build_lift_network re-checks the stage profile, so the induction
        // hypothesis is enforced at every ground.
        const LiftNetwork lift = build_lift_network(family);
        const Report conserved = check_conservation(lift.net);
        if (!conserved.ok())
            throw std::logic_error("construct: stage " + std::to_string(ell) +
                                   " network breaks conservation: " + conserved.joined());
        const auto in = lift.net.in_numerators();
        for (std::size_t v = 0; v < lift.net.vertices.size(); ++v) {
            if (lift.net.vertices[v].role != VertexRole::SinkHub) continue;
            if (in[v] != want_tau * lift.net.denominator)
                throw std::logic_error("construct: stage " + std::to_string(ell) +
                                       " tau in-sum is " + std::to_string(in[v]) + "/" +
                                       std::to_string(lift.net.denominator) + ", expected " +
                                       std::to_string(want_tau));
        }

        const IntegralCirculation g = round_integral(lift.net);
        const Report rounded = validate_rounding(lift.net, g);
        if (!rounded.ok())
            throw std::logic_error("construct: stage " + std::to_string(ell) +
                                   " rounding is invalid: " + rounded.joined());

        SplitFamily lifted = apply_lift(family, lift, g);
        if (observer) observer(LiftStage{ell, family, lift, g, lifted});
        family = std::move(lifted);
    }

    const Report profile = check_family_profile(family);
    if (!profile.ok())
        throw std::logic_error("construct: final family fails the profile: " + profile.joined());

    Partition partition = to_parallel_classes(family);
    const Report valid = validate_partition(partition);
    if (!valid.ok())
        throw std::logic_error("construct: output partition is invalid: " + valid.joined());
    return partition;
}

LatinCube construct_cube(int order, std::uint64_t seed) {
    return partition_to_cube(construct_partition(order, seed));
}

}  // namespace symcube
