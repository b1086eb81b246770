#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace latpoly;

TEST_CASE("reeve simplices") {
    for (int k = 1; k <= 10; ++k) {
        LatticePolytope p = reeve_simplex(Int(k));
        REQUIRE(p.lattice_points.size() == 4);
        REQUIRE(normalized_volume(p) == k);
    }
    REQUIRE(is_smooth(reeve_simplex(Int(1))));
    REQUIRE_FALSE(is_smooth(reeve_simplex(Int(2))));
    REQUIRE_THROWS_AS(reeve_simplex(Int(0)), std::invalid_argument);

    // the second dilation picks up exactly the k extra points on the diagonal
    LatticePolytope d2 = dilate(reeve_simplex(Int(4)), Int(2));
    REQUIRE(d2.lattice_points.size() == 13);
}

TEST_CASE("bruns polytope") {
    for (int k = 1; k <= 4; ++k) {
        LatticePolytope p = bruns_polytope(Int(k));
        REQUIRE(p.lattice_points.size() == 8);
        REQUIRE(polytope_multiplicity(p) == k + 1);
        REQUIRE(is_very_ample(p));
    }
    LatticePolytope p2 = bruns_polytope(Int(2));
    auto gd = gorenstein_data(tangent_cone(p2, {Int(0), Int(1), Int(0)}));
    REQUIRE((!gd || !gd->is_gorenstein));
}

TEST_CASE("hirzebruch trapezoids") {
    for (int a = 0; a <= 5; ++a) {
        MarkedPolytope mp = hirzebruch_trapezoid(Int(a));
        REQUIRE(mp.polytope.vertices.size() == 4);
        REQUIRE(is_smooth(mp.polytope));
        REQUIRE(mp.polytope.lattice_points.size() == size_t(a) + 4);
        for (const Vec& m : mp.marked_points)
            REQUIRE(polytope_contains(mp.polytope, m));
    }
    REQUIRE_THROWS_AS(hirzebruch_trapezoid(Int(-1)), std::invalid_argument);
}

TEST_CASE("fibonacci numbers and chain") {
    REQUIRE(fibonacci_number(0) == 0);
    REQUIRE(fibonacci_number(1) == 1);
    REQUIRE(fibonacci_number(10) == 55);
    Mat chain = fibonacci_chain(2);
    REQUIRE(chain.size() == 5);
    REQUIRE(chain.front() == Vec{Int(1), Int(0)});
    REQUIRE(chain.back() == Vec{Int(0), Int(1)});
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        Int d = chain[i][0] * chain[i + 1][1] - chain[i][1] * chain[i + 1][0];
        REQUIRE(d == 1);
    }
}

TEST_CASE("fibonacci boundary walk closes with unit steps") {
    for (int k = 1; k <= 3; ++k) {
        Mat walk = fibonacci_boundary_walk(k);
        REQUIRE(walk.size() == size_t(8 * k + 4));
        for (size_t i = 0; i < walk.size(); ++i) {
            const Vec& a = walk[i];
            const Vec& b = walk[(i + 1) % walk.size()];
            REQUIRE(segment_lattice_length(a, b) == 1);
        }
    }
}

TEST_CASE("fibonacci polygons are smooth") {
    for (int k = 1; k <= 3; ++k) {
        LatticePolytope p = fibonacci_polygon(k);
        REQUIRE(is_smooth(p));
        REQUIRE(p.vertices.size() == size_t(8 * k));
        // every walk point lies on the boundary of the hull
        Mat walk = fibonacci_boundary_walk(k);
        for (const Vec& w : walk) REQUIRE(polytope_contains(p, w));
    }
}
