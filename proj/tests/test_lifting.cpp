#include <doctest.h>

#include <set>
#include <thread>

#include "symcube/convert.hpp"
#include "symcube/lifting.hpp"
#include "symcube/oracle.hpp"

using namespace symcube;

TEST_SUITE_BEGIN("lifting");

TEST_CASE("seed families mirror the solved triples") {
    SUBCASE("order 1") {
        const SplitFamily family = initial_family(solve_system(1));
        REQUIRE(family.splits.size() == 1);
        CHECK(family.ground == 1);
        CHECK(family.splits[0].multiplicity(Block::make(1, {})) == 1);
        CHECK(check_family_profile(family).ok());
    }
    SUBCASE("order 2") {
        const SplitFamily family = initial_family(solve_system(2));
        REQUIRE(family.splits.size() == 4);
        CHECK(family.splits[0].multiplicity(Block::make(1, {})) == 2);
        for (int i = 1; i < 4; ++i) {
            CHECK(family.splits[static_cast<std::size_t>(i)].multiplicity(Block::make(2, {})) == 1);
            CHECK(family.splits[static_cast<std::size_t>(i)].counts.size() == 1);
        }
        CHECK(check_family_profile(family).ok());
    }
    SUBCASE("order 5") {
        const SplitFamily family = initial_family(solve_system(5));
        REQUIRE(family.splits.size() == 25);
        for (int i = 0; i < 20; ++i) {
            const Split& s = family.splits[static_cast<std::size_t>(i)];
            CHECK(s.multiplicity(Block::make(2, {})) == 1);
            CHECK(s.multiplicity(Block::make(3, {})) == 1);
            CHECK(s.counts.size() == 2);
        }
        for (int i = 20; i < 25; ++i) {
            const Split& s = family.splits[static_cast<std::size_t>(i)];
            CHECK(s.multiplicity(Block::make(1, {})) == 1);
            CHECK(s.multiplicity(Block::make(2, {})) == 2);
        }
        CHECK(check_family_profile(family).ok());
    }
    SUBCASE("rejects an invalid solution") {
        SystemSolution sol = solve_system(2);
        sol.triples[0][0] = 1;
        CHECK_THROWS_AS(initial_family(sol), std::invalid_argument);
    }
}

TEST_CASE("the first stage network for order 2") {
    const SplitFamily family = initial_family(solve_system(2));

    SUBCASE("contracted") {
        const LiftNetwork lift = build_lift_network(family);
        const FlowNetwork& net = lift.net;
        CHECK(net.denominator == 2);
        // sigma, tau, four split nodes, three class shapes.
        CHECK(net.vertices.size() == 9);
        CHECK(net.edges.size() == 4 + 4 + 3 + 1);
        CHECK(check_conservation(net).ok());

        const auto in = net.in_numerators();
        for (std::size_t v = 0; v < net.vertices.size(); ++v) {
            if (net.vertices[v].role == VertexRole::SinkHub)
                CHECK(in[v] == 4 * net.denominator);  // n^2
            if (net.vertices[v].role == VertexRole::ClassNode) {
                const Block& shape = net.vertices[v].block;
                CHECK(in[v] == a_coeff(shape.ones, shape.others_count) *
                                   binom(2 - 1, shape.ones - 1) * net.denominator);
            }
        }
    }
    SUBCASE("expanded") {
        const LiftNetwork lift = build_lift_network(family, false);
        const FlowNetwork& net = lift.net;
        // Split 1 fans out over two occurrence vertices carrying 1/2 each.
        int occurrence_edges = 0;
        for (const auto& e : net.edges) {
            const NetVertex& tail = net.vertices[static_cast<std::size_t>(e.tail)];
            const NetVertex& head = net.vertices[static_cast<std::size_t>(e.head)];
            if (tail.role == VertexRole::SplitNode && head.role == VertexRole::BlockNode &&
                tail.split_index == 1) {
                ++occurrence_edges;
                CHECK(e.numerator == 1);  // 1/2
                CHECK(head.block == Block::make(1, {}));
            }
        }
        CHECK(occurrence_edges == 2);
        CHECK(check_conservation(net).ok());
    }
}

TEST_CASE("one lift of the order-2 family is forced") {
    const SplitFamily family = initial_family(solve_system(2));
    const LiftNetwork lift = build_lift_network(family);
    const IntegralCirculation g = round_integral(lift.net);

    const LiftChoice choice = extract_choices(lift, g);
    CHECK(choice.chosen[0] == Block::make(1, {}));
    for (std::size_t i = 1; i < 4; ++i) CHECK(choice.chosen[i] == Block::make(2, {}));

    const SplitFamily lifted = apply_lift(family, lift, g);
    CHECK(lifted.ground == 2);
    CHECK(lifted.splits[0].multiplicity(Block::make(1, {})) == 1);
    CHECK(lifted.splits[0].multiplicity(Block::make(0, {2})) == 1);
    for (std::size_t i = 1; i < 4; ++i) {
        CHECK(lifted.splits[i].multiplicity(Block::make(1, {2})) == 1);
        CHECK(lifted.splits[i].counts.size() == 1);
    }
    CHECK(check_family_profile(lifted).ok());

    // Size mass is preserved by promotion.
    long long before = 0, after = 0;
    for (const auto& s : family.splits) before += s.point_mass();
    for (const auto& s : lifted.splits) after += s.point_mass();
    CHECK(before == after);
}

TEST_CASE("malformed roundings are rejected") {
    const SplitFamily family = initial_family(solve_system(2));
    const LiftNetwork lift = build_lift_network(family);
    IntegralCirculation zeros;
    zeros.values.assign(lift.net.edges.size(), 0);
    CHECK_THROWS_AS(extract_choices(lift, zeros), std::invalid_argument);

    IntegralCirculation wrong_size;
    CHECK_THROWS_AS(extract_choices(lift, wrong_size), std::invalid_argument);
}

TEST_CASE("network construction preconditions") {
    SplitFamily family = initial_family(solve_system(5));
    family.ground = 2;  // lie about the ground; the stage profile now fails
    CHECK_THROWS_WITH_AS(build_lift_network(family),
                         doctest::Contains("profile"), std::invalid_argument);

    SplitFamily done = initial_family(solve_system(1));
    CHECK_THROWS_AS(build_lift_network(done), std::invalid_argument);  // ground == order
}

TEST_CASE("construct_partition outputs for tiny orders") {
    SUBCASE("order 1") {
        const Partition p = construct_partition(1);
        REQUIRE(p.classes.size() == 1);
        CHECK(p.classes[0].blocks == std::vector<PointSet>{{1}});
    }
    SUBCASE("order 2") {
        const Partition p = construct_partition(2);
        REQUIRE(p.classes.size() == 4);
        CHECK(validate_partition(p).ok());
        int mixed = 0, pairs = 0;
        for (const auto& cls : p.classes) {
            if (cls.blocks == std::vector<PointSet>{{1}, {2}}) ++mixed;
            if (cls.blocks == std::vector<PointSet>{{1, 2}}) ++pairs;
        }
        CHECK(mixed == 1);
        CHECK(pairs == 3);
    }
    SUBCASE("order 5") {
        const Partition p = construct_partition(5);
        CHECK(p.classes.size() == 25);
        CHECK(validate_partition(p).ok());
    }
}

TEST_CASE("infeasible orders raise the solver's reason") {
    CHECK_THROWS_AS(construct_partition(3), InfeasibleOrder);
    CHECK_THROWS_AS(construct_partition(10), InfeasibleOrder);
    CHECK_THROWS_AS(construct_cube(7), InfeasibleOrder);
}

TEST_CASE("every stage of a construction satisfies the inductive checks") {
    for (int order : {5, 6}) {
        int stages = 0;
        const Partition p = construct_partition(order, 0, [&](const LiftStage& stage) {
            ++stages;
            CHECK(stage.family.ground == stage.stage);
            CHECK(stage.lifted.ground == stage.stage + 1);
            CHECK(check_family_profile(stage.family).ok());
            CHECK(check_family_profile(stage.lifted).ok());
            CHECK(check_conservation(stage.network.net).ok());
            CHECK(validate_rounding(stage.network.net, stage.rounding).ok());

            // Exactly one promoted unit leaves every split node.
            const FlowNetwork& net = stage.network.net;
            std::map<int, long long> leaving;
            for (std::size_t e = 0; e < net.edges.size(); ++e) {
                const NetVertex& tail = net.vertices[static_cast<std::size_t>(net.edges[e].tail)];
                const NetVertex& head = net.vertices[static_cast<std::size_t>(net.edges[e].head)];
                if (tail.role == VertexRole::SplitNode && head.role == VertexRole::ClassNode)
                    leaving[tail.split_index] += stage.rounding.values[e];
            }
            for (const auto& [split, total] : leaving) CHECK(total == 1);
            CHECK(leaving.size() == static_cast<std::size_t>(order) * order);
        });
        CHECK(stages == order - 1);
        CHECK(validate_partition(p).ok());
    }
}

TEST_CASE("the expanded network model lifts identically well") {
    SplitFamily family = initial_family(solve_system(5));
    for (int ell = 1; ell < 5; ++ell) {
        const LiftNetwork lift = build_lift_network(family, false);
        CHECK(check_conservation(lift.net).ok());
        const IntegralCirculation g = round_integral(lift.net);
        family = apply_lift(family, lift, g);
        CHECK(check_family_profile(family).ok());
    }
    CHECK(family.ground == 5);
}

TEST_CASE("distinct orders construct concurrently") {
    Partition p6, p8;
    {
        std::jthread six([&] { p6 = construct_partition(6); });
        std::jthread eight([&] { p8 = construct_partition(8); });
    }
    CHECK(validate_partition(p6).ok());
    CHECK(validate_partition(p8).ok());
    // Identical to a sequential run of the same pipeline.
    const Partition again = construct_partition(6);
    REQUIRE(again.classes.size() == p6.classes.size());
    for (std::size_t c = 0; c < again.classes.size(); ++c)
        CHECK(again.classes[c].blocks == p6.classes[c].blocks);
}

TEST_CASE("seeds are reproducible and leave outputs valid") {
    const Partition a = construct_partition(6, 42);
    const Partition b = construct_partition(6, 42);
    REQUIRE(a.classes.size() == b.classes.size());
    for (std::size_t c = 0; c < a.classes.size(); ++c)
        CHECK(a.classes[c].blocks == b.classes[c].blocks);
    CHECK(validate_partition(a).ok());

    const Partition other = construct_partition(6, 7);
    CHECK(validate_partition(other).ok());
}

TEST_SUITE_END();
