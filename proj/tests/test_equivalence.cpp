#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

#include <random>

using namespace latpoly;
using testutil::pts2;
using testutil::pts3;

namespace {
// Deterministic unimodular map: product of elementary shears and sign flips.
Mat random_unimodular(int dim, std::mt19937_64& eng) {
    Mat u = identity_matrix(dim);
    for (int step = 0; step < 6; ++step) {
        int i = int(eng() % dim), j = int(eng() % dim);
        if (i == j) continue;
        Int s = Int(int(eng() % 5)) - 2;
        for (int c = 0; c < dim; ++c) u[i][c] += s * u[j][c];
    }
    return u;
}

LatticePolytope transformed(const LatticePolytope& p, const Mat& u, const Vec& t) {
    Mat pts;
    for (const Vec& v : p.vertices) pts.push_back(vec_add(mat_apply(u, v), t));
    return hull_from_points(pts);
}
}  // namespace

TEST_CASE("canonical form is invariant under unimodular maps") {
    LatticePolytope p = hull_from_points(pts2({{0, 0}, {2, 0}, {0, 1}, {2, 1}}));
    REQUIRE(is_smooth(p));
    CanonicalForm base = canonical_form_smooth(p);
    std::mt19937_64 eng(7);
    for (int trial = 0; trial < 25; ++trial) {
        Mat u = random_unimodular(2, eng);
        Vec t = {Int(int(eng() % 9)) - 4, Int(int(eng() % 9)) - 4};
        CanonicalForm moved = canonical_form_smooth(transformed(p, u, t));
        REQUIRE(moved == base);
    }
}

TEST_CASE("canonical form separates inequivalent polygons") {
    CanonicalForm tri =
        canonical_form_smooth(hull_from_points(pts2({{0, 0}, {1, 0}, {0, 1}})));
    CanonicalForm square =
        canonical_form_smooth(hull_from_points(pts2({{0, 0}, {1, 0}, {0, 1}, {1, 1}})));
    CanonicalForm big_tri =
        canonical_form_smooth(hull_from_points(pts2({{0, 0}, {2, 0}, {0, 2}})));
    REQUIRE_FALSE(tri == square);
    REQUIRE_FALSE(tri == big_tri);
    REQUIRE((tri < square || square < tri));
}

TEST_CASE("canonical form rejects non-smooth input") {
    LatticePolytope wide = hull_from_points(pts2({{0, 0}, {2, 1}, {1, 2}}));
    REQUIRE_THROWS_AS(canonical_form_smooth(wide), std::invalid_argument);
}

TEST_CASE("are_equivalent on smooth and non-smooth pairs") {
    LatticePolytope p = hull_from_points(pts2({{0, 0}, {3, 0}, {0, 3}}));  // not smooth? no: dilated unit triangle is smooth
    LatticePolytope q = hull_from_points(pts2({{5, 5}, {8, 5}, {5, 8}}));
    REQUIRE(are_equivalent(p, q));

    // non-smooth pair: equivalent via x -> x + y shear
    LatticePolytope a = hull_from_points(pts2({{0, 0}, {2, 1}, {1, 2}}));
    Mat shear = {{Int(1), Int(1)}, {Int(0), Int(1)}};
    LatticePolytope b = transformed(a, shear, {Int(3), Int(-2)});
    REQUIRE_FALSE(is_smooth(a));
    REQUIRE(are_equivalent(a, b));

    // same vertex count and volume, still inequivalent
    LatticePolytope c = hull_from_points(pts2({{0, 0}, {4, 0}, {0, 1}}));
    LatticePolytope d = hull_from_points(pts2({{0, 0}, {2, 0}, {0, 2}}));
    REQUIRE(normalized_volume(c) == normalized_volume(d));
    REQUIRE_FALSE(are_equivalent(c, d));
}

TEST_CASE("equivalence in dimension three") {
    LatticePolytope cube = hull_from_points(
        pts3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
    std::mt19937_64 eng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Mat u = random_unimodular(3, eng);
        Vec t = {Int(int(eng() % 7)) - 3, Int(int(eng() % 7)) - 3, Int(int(eng() % 7)) - 3};
        LatticePolytope moved = transformed(cube, u, t);
        REQUIRE(are_equivalent(cube, moved));
        REQUIRE(canonical_form_smooth(moved) == canonical_form_smooth(cube));
    }
    LatticePolytope simplex =
        hull_from_points(pts3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    REQUIRE_FALSE(are_equivalent(cube, simplex));
}

TEST_CASE("polytopes of different dimension never match") {
    LatticePolytope seg = hull_from_points(pts2({{0, 0}, {3, 0}}));
    LatticePolytope tri = hull_from_points(pts2({{0, 0}, {1, 0}, {0, 1}}));
    REQUIRE_FALSE(are_equivalent(seg, tri));
}

TEST_CASE("dedup_classes groups equivalent polytopes") {
    std::vector<LatticePolytope> input = {
        hull_from_points(pts2({{0, 0}, {1, 0}, {0, 1}})),
        hull_from_points(pts2({{4, 4}, {5, 4}, {4, 5}})),
        hull_from_points(pts2({{0, 0}, {1, 0}, {0, 1}, {1, 1}})),
    };
    auto classes = dedup_classes(input);
    REQUIRE(classes.size() == 2);
}

TEST_CASE("reference polygons are pairwise inequivalent") {
    auto polys = builtin_classes(2);
    REQUIRE(polys.size() == 41);
    // spot-check a fast cross-section rather than the full quadratic pass
    for (size_t i = 0; i < polys.size(); i += 7)
        for (size_t j = i + 1; j < polys.size(); j += 5)
            REQUIRE_FALSE(are_equivalent(polys[i], polys[j]));
}
