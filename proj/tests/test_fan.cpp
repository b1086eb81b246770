#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace latpoly;
using testutil::pts2;

TEST_CASE("normal fan of the unit square") {
    LatticePolytope square = hull_from_points(pts2({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    Fan f = normal_fan(square);
    REQUIRE(f.rays.size() == 4);
    REQUIRE(f.maximal_cones.size() == 4);
    REQUIRE(fan_is_smooth(f));
    REQUIRE(fan_is_complete(f));
    // outward normals of the square
    REQUIRE(std::count(f.rays.begin(), f.rays.end(), Vec{Int(1), Int(0)}) == 1);
    REQUIRE(std::count(f.rays.begin(), f.rays.end(), Vec{Int(-1), Int(0)}) == 1);
}

TEST_CASE("normal fan of a 3-polytope") {
    Mat cube;
    for (int x = 0; x <= 1; ++x)
        for (int y = 0; y <= 1; ++y)
            for (int z = 0; z <= 1; ++z) cube.push_back({Int(x), Int(y), Int(z)});
    Fan f = normal_fan(hull_from_points(cube));
    REQUIRE(f.rays.size() == 6);
    REQUIRE(f.maximal_cones.size() == 8);
    REQUIRE(fan_is_smooth(f));
    REQUIRE(fan_is_complete(f));
}

TEST_CASE("make_fan validates its input") {
    // non-primitive ray
    REQUIRE_THROWS_AS(make_fan({{Int(2), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-1)}},
                               {{0, 1}, {1, 2}, {0, 2}}),
                      std::invalid_argument);
    // repeated ray
    REQUIRE_THROWS_AS(make_fan({{Int(1), Int(0)}, {Int(1), Int(0)}}, {{0, 1}}),
                      std::invalid_argument);
    // cone without full rank
    REQUIRE_THROWS_AS(make_fan({{Int(1), Int(0)}, {Int(-1), Int(0)}}, {{0, 1}}),
                      std::invalid_argument);
}

TEST_CASE("fan normalization is order independent") {
    Fan a = make_fan({{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-1)}},
                     {{0, 1}, {1, 2}, {2, 0}});
    Fan b = make_fan({{Int(0), Int(1)}, {Int(-1), Int(-1)}, {Int(1), Int(0)}},
                     {{2, 0}, {0, 1}, {1, 2}});
    REQUIRE(a == b);
}

TEST_CASE("blow-up inserts the primitive ray sum") {
    Fan p2 = make_fan({{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-1)}},
                      {{0, 1}, {1, 2}, {2, 0}});
    int idx0 = -1, idx1 = -1;
    for (size_t i = 0; i < p2.rays.size(); ++i) {
        if (p2.rays[i] == Vec{Int(1), Int(0)}) idx0 = int(i);
        if (p2.rays[i] == Vec{Int(0), Int(1)}) idx1 = int(i);
    }
    Fan bl = blow_up_fan(p2, {idx0, idx1});
    REQUIRE(bl.rays.size() == 4);
    REQUIRE(std::count(bl.rays.begin(), bl.rays.end(), Vec{Int(1), Int(1)}) == 1);
    REQUIRE(bl.maximal_cones.size() == 4);
    REQUIRE(fan_is_smooth(bl));
    REQUIRE(fan_is_complete(bl));

    // blowing up a pair that spans no cone is rejected
    int idx2 = -1;
    for (size_t i = 0; i < bl.rays.size(); ++i)
        if (bl.rays[i] == Vec{Int(-1), Int(-1)}) idx2 = int(i);
    int idxnew = -1;
    for (size_t i = 0; i < bl.rays.size(); ++i)
        if (bl.rays[i] == Vec{Int(1), Int(1)}) idxnew = int(i);
    REQUIRE_THROWS_AS(blow_up_fan(bl, {idx2, idxnew}), std::invalid_argument);
}

TEST_CASE("blow-down detects contractible rays") {
    Fan p2 = make_fan({{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-1)}},
                      {{0, 1}, {1, 2}, {2, 0}});
    REQUIRE_FALSE(find_blow_down(p2).has_value());

    int idx0 = -1, idx1 = -1;
    for (size_t i = 0; i < p2.rays.size(); ++i) {
        if (p2.rays[i] == Vec{Int(1), Int(0)}) idx0 = int(i);
        if (p2.rays[i] == Vec{Int(0), Int(1)}) idx1 = int(i);
    }
    Fan bl = blow_up_fan(p2, {idx0, idx1});
    auto down = find_blow_down(bl);
    REQUIRE(down.has_value());
    REQUIRE(bl.rays[*down] == Vec{Int(1), Int(1)});
}

TEST_CASE("hirzebruch fans are smooth and complete") {
    for (const Fan& f : minimal_smooth_2fans(4)) {
        REQUIRE(fan_is_smooth(f));
        REQUIRE(fan_is_complete(f));
    }
    // P^2 plus trapezoid fans for a = 0..4
    REQUIRE(minimal_smooth_2fans(4).size() == 6);
}

TEST_CASE("builtin seed fans are deduplicated smooth complete fans") {
    auto seeds = builtin_seed_fans(3);
    REQUIRE(seeds.size() == 23);
    for (const Fan& f : seeds) {
        REQUIRE(f.dim == 3);
        REQUIRE(fan_is_smooth(f));
        REQUIRE(fan_is_complete(f));
    }
    for (size_t i = 0; i < seeds.size(); ++i)
        for (size_t j = i + 1; j < seeds.size(); ++j) REQUIRE_FALSE(seeds[i] == seeds[j]);
}

TEST_CASE("normal fan round trip preserves the polytope's combinatorics") {
    for (const LatticePolytope& p : builtin_classes(2)) {
        Fan f = normal_fan(p);
        REQUIRE(fan_is_smooth(f));
        REQUIRE(fan_is_complete(f));
        REQUIRE(f.maximal_cones.size() == p.vertices.size());
        REQUIRE(f.rays.size() == p.facets.size());
    }
}
