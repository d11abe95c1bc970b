#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "wordrep/oracle.hpp"

using namespace wordrep;

namespace {

std::vector<std::vector<std::uint8_t>> collect_partitions(int cells) {
    std::vector<std::vector<std::uint8_t>> out;
    for_each_partition(cells, [&](const std::vector<std::uint8_t>& p) { out.push_back(p); });
    return out;
}

CircledPartition random_array(GridShape shape, std::mt19937& rng) {
    CircledPartition a;
    a.shape = shape;
    a.block_of.resize(shape.cells());
    int top = 0;
    for (int c = 1; c < shape.cells(); ++c) {
        a.block_of[c] = std::uniform_int_distribution<int>(0, top + 1)(rng);
        top = std::max(top, int(a.block_of[c]));
    }
    for (int b = 0; b <= top; ++b) {
        std::vector<int> members;
        for (int c = 0; c < shape.cells(); ++c)
            if (a.block_of[c] == b) members.push_back(c);
        int pick = std::uniform_int_distribution<int>(0, int(members.size()))(rng);
        if (pick > 0) a.circled |= 1u << members[pick - 1];
    }
    return a;
}

}  // namespace

TEST_CASE("partition enumeration is lexicographic and complete", "[oracle]") {
    auto one = collect_partitions(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == std::vector<std::uint8_t>{0});

    auto three = collect_partitions(3);
    REQUIRE(three.size() == 5);
    CHECK(three.front() == std::vector<std::uint8_t>{0, 0, 0});
    CHECK(three.back() == std::vector<std::uint8_t>{0, 1, 2});
    CHECK(std::is_sorted(three.begin(), three.end()));

    CHECK(collect_partitions(4).size() == 15);
    CHECK(collect_partitions(5).size() == 52);
    CHECK(collect_partitions(10).size() == 115975);

    for (const auto& p : collect_partitions(6)) {
        CircledPartition a{{2, 3}, p, 0};
        CHECK(a.valid());
    }
}

TEST_CASE("circle placements per partition", "[oracle]") {
    CHECK(circled_weight({0, 0}) == 3);
    CHECK(circled_weight({0, 1, 2}) == 8);
    CHECK(circled_weight({0, 0, 1, 2}) == 12);
    CHECK(circled_weight({0, 0, 0, 0}) == 5);
}

TEST_CASE("symmetry action on arrays", "[oracle]") {
    std::mt19937 rng(20240817);
    GridShape shapes[] = {{2, 3}, {3, 3}, {1, 5}, {4, 2}};
    for (GridShape s : shapes) {
        for (int trial = 0; trial < 50; ++trial) {
            CircledPartition a = random_array(s, rng);
            REQUIRE(a.valid());
            CHECK(act(SymmetryKind::identity, a) == a);
            for (SymmetryKind g : {SymmetryKind::horizontal_reflect,
                                   SymmetryKind::vertical_reflect, SymmetryKind::rotate180}) {
                CircledPartition image = act(g, a);
                CHECK(image.valid());
                CHECK(act(g, image) == a);  // every non-identity symmetry is an involution
            }
            CHECK(act(SymmetryKind::rotate180, a) ==
                  act(SymmetryKind::horizontal_reflect, act(SymmetryKind::vertical_reflect, a)));
        }
    }
}

TEST_CASE("subgroup closure", "[oracle]") {
    using enum SymmetryKind;
    CHECK(subgroup_closure({}) == std::vector<SymmetryKind>{identity});
    CHECK(subgroup_closure({rotate180}) == std::vector<SymmetryKind>{identity, rotate180});
    CHECK(subgroup_closure({horizontal_reflect, vertical_reflect}) ==
          std::vector<SymmetryKind>{identity, horizontal_reflect, vertical_reflect, rotate180});
    CHECK(compose(horizontal_reflect, vertical_reflect) == rotate180);
    CHECK(compose(rotate180, rotate180) == identity);
}

TEST_CASE("total array counts", "[oracle]") {
    CHECK(count_all({1, 1}) == 2);
    CHECK(count_all({2, 1}) == 7);
    CHECK(count_all({3, 1}) == 30);
    CHECK(count_all({2, 2}) == 152);
    CHECK(count_all({2, 3}) == 5653);
    CHECK(count_all({3, 2}) == 5653);
}

TEST_CASE("arrays fixed by chosen symmetries", "[oracle]") {
    using enum SymmetryKind;
    CHECK(count_fixed({2, 1}, {horizontal_reflect}) == 3);
    CHECK(count_fixed({3, 1}, {horizontal_reflect}) == 8);
    CHECK(count_fixed({3, 1}, {vertical_reflect}) == 30);
    CHECK(count_fixed({3, 1}, {rotate180}) == 8);
    CHECK(count_fixed({2, 2}, {horizontal_reflect}) == 16);
    CHECK(count_fixed({2, 2}, {horizontal_reflect, vertical_reflect}) == 6);
    CHECK(count_fixed({2, 3}, {horizontal_reflect}) == 107);
    CHECK(count_fixed({2, 3}, {vertical_reflect}) == 197);
    CHECK(count_fixed({2, 3}, {rotate180}) == 107);
    CHECK(count_fixed({2, 3}, {horizontal_reflect, vertical_reflect}) == 23);
    CHECK(count_fixed({2, 3}, {}) == count_all({2, 3}));

    // two generators close over their product
    for (GridShape s : {GridShape{2, 3}, GridShape{3, 3}, GridShape{4, 2}})
        CHECK(count_fixed(s, {horizontal_reflect, vertical_reflect}) ==
              count_fixed(s, {horizontal_reflect, vertical_reflect, rotate180}));
}

TEST_CASE("factored fixed counts agree with per-array screening", "[oracle]") {
    using enum SymmetryKind;
    std::vector<std::vector<SymmetryKind>> generator_sets = {
        {horizontal_reflect},
        {vertical_reflect},
        {rotate180},
        {horizontal_reflect, vertical_reflect},
    };
    for (int rows = 1; rows <= 8; ++rows)
        for (int cols = 1; rows * cols <= 8; ++cols)
            for (const auto& ops : generator_sets) {
                GridShape s{rows, cols};
                INFO("shape " << s.str());
                CHECK(count_fixed(s, ops) == count_fixed_naive(s, ops));
            }
}

TEST_CASE("orbit counts", "[oracle]") {
    CHECK(count_orbits({1, 1}) == 2);
    CHECK(count_orbits({1, 2}) == 5);
    CHECK(count_orbits({3, 1}) == 19);
    CHECK(count_orbits({2, 2}) == 50);
    CHECK(count_orbits({2, 3}) == 1516);
}

TEST_CASE("orbit counts satisfy the averaging identity", "[oracle]") {
    using enum SymmetryKind;
    for (int rows = 1; rows <= 9; ++rows)
        for (int cols = 1; rows * cols <= 9; ++cols) {
            GridShape s{rows, cols};
            Natural sum = count_all(s) + count_fixed(s, {horizontal_reflect}) +
                          count_fixed(s, {vertical_reflect}) + count_fixed(s, {rotate180});
            INFO("shape " << s.str());
            REQUIRE(sum % 4 == 0);
            CHECK(count_orbits(s) == sum / 4);
        }
}

TEST_CASE("enumeration refuses oversized shapes", "[oracle]") {
    CHECK_THROWS_AS(count_all({4, 3}), OracleLimitError);
    CHECK_THROWS_AS(count_orbits({11, 1}), OracleLimitError);
    CHECK_THROWS_AS(count_fixed({3, 4}, {SymmetryKind::rotate180}), OracleLimitError);
    try {
        count_all({5, 3});
    } catch (const OracleLimitError& e) {
        CHECK(e.cells == 15);
        CHECK(e.limit == 10);
    }
    OracleLimit raised{12};
    CHECK(count_all({4, 3}, raised) == count_all({12, 1}, raised));
    CHECK_THROWS_AS(count_all({13, 1}, raised), OracleLimitError);
}
