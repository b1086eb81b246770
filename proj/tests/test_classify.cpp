#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

#include <sstream>

using namespace latpoly;

namespace {
Fan p2_fan() {
    return make_fan({{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-1)}},
                    {{0, 1}, {0, 2}, {1, 2}});
}

Fan octagon_fan() {
    Mat rays = {{Int(1), Int(0)},   {Int(1), Int(1)},   {Int(1), Int(2)},
                {Int(0), Int(1)},   {Int(-1), Int(0)},  {Int(-1), Int(-1)},
                {Int(-1), Int(-2)}, {Int(0), Int(-1)}};
    std::vector<std::vector<int>> cones;
    for (int i = 0; i < 8; ++i) cones.push_back({i, (i + 1) % 8});
    return make_fan(rays, cones);
}

// Contract one ray of a 2D cyclic fan (inverse of a blow-up).
Fan contract_ray(const Fan& f, const Vec& ray) {
    Mat rays;
    for (const Vec& r : f.rays)
        if (r != ray) rays.push_back(r);
    // rebuild consecutive cones in angular order
    std::vector<int> order(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto half = [](const Vec& v) { return v[1] < 0 || (v[1] == 0 && v[0] < 0) ? 1 : 0; };
        const Vec &va = rays[a], &vb = rays[b];
        if (half(va) != half(vb)) return half(va) < half(vb);
        return va[0] * vb[1] - va[1] * vb[0] > 0;
    });
    std::vector<std::vector<int>> cones;
    for (size_t i = 0; i < order.size(); ++i)
        cones.push_back({order[i], order[(i + 1) % order.size()]});
    return make_fan(rays, cones);
}
}  // namespace

TEST_CASE("chamber model of the projective plane fan") {
    ChamberModel m = chamber_model(p2_fan());
    REQUIRE(m.fan.maximal_cones.size() == 3);
    REQUIRE(m.walls.size() == 3);
    REQUIRE(m.edge_functionals.size() == 3);
    for (const Vec& row : m.edge_functionals)
        REQUIRE(row == Vec{Int(1), Int(1), Int(1)});
}

TEST_CASE("chamber model rejects bad fans") {
    Fan weighted = make_fan({{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-2)}},
                            {{0, 1}, {0, 2}, {1, 2}});
    REQUIRE_THROWS_AS(chamber_model(weighted), std::invalid_argument);

    Fan partial = make_fan({{Int(1), Int(0)}, {Int(0), Int(1)}}, {{0, 1}});
    REQUIRE_THROWS_AS(chamber_model(partial), std::invalid_argument);
}

TEST_CASE("rhs enumeration on the projective plane") {
    ChamberModel m = chamber_model(p2_fan());
    RhsEnumeration en = enumerate_rhs(m, 12);
    // dilations of the unit triangle with at most 12 points: sizes 1, 2, 3
    REQUIRE(en.rhs_vectors.size() == 3);
    for (const Vec& b : en.rhs_vectors) {
        LatticePolytope p = detail::polytope_from_rhs(m, b);
        REQUIRE(p.vertices.size() == 3);
        REQUIRE(is_smooth(p));
        REQUIRE(p.lattice_points.size() <= 12);
        REQUIRE(normal_fan(p) == m.fan);
    }
}

TEST_CASE("minimal point counts") {
    REQUIRE(min_lattice_points(p2_fan()) == 3);
    Fan cube_fan = normal_fan(hull_from_points(
        testutil::pts3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                        {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})));
    REQUIRE(min_lattice_points(cube_fan) == 8);
}

TEST_CASE("octagon fan needs more points than its contractions suggest") {
    Fan f8 = octagon_fan();
    REQUIRE(fan_is_smooth(f8));
    REQUIRE(fan_is_complete(f8));
    REQUIRE(min_lattice_points(f8) == 12);
    // contracting any contractible ray gives fans whose minimal polytopes
    // are strictly larger, so pruning by monotonicity along blow-ups is wrong
    REQUIRE(min_lattice_points(contract_ray(f8, {Int(1), Int(0)})) == 13);
    REQUIRE(min_lattice_points(contract_ray(f8, {Int(1), Int(2)})) == 13);
}

TEST_CASE("classification of tiny polygon ranges") {
    auto seeds = minimal_smooth_2fans(3);
    ClassifyResult r3 = classify(2, 3, seeds);
    REQUIRE(r3.complete);
    REQUIRE(r3.classes.size() == 1);
    REQUIRE(r3.classes[0].rep.vertices.size() == 3);

    ClassifyResult r4 = classify(2, 4, seeds);
    REQUIRE(r4.classes.size() == 2);

    ClassifyResult r6 = classify(2, 6, seeds);
    REQUIRE(r6.classes.size() == 6);
    for (const auto& cls : r6.classes) {
        REQUIRE(is_smooth(cls.rep));
        REQUIRE(cls.rep.lattice_points.size() <= 6);
    }
}

TEST_CASE("classification results are deterministic") {
    auto run = [] {
        ClassifyResult r = classify(2, 8, minimal_smooth_2fans(5));
        std::ostringstream os;
        for (const auto& cls : r.classes) {
            ClassRecord rec = make_class_record(cls, false);
            os << class_record_to_json(rec).dump() << "\n";
        }
        return os.str();
    };
    std::string a = run();
    std::string b = run();
    REQUIRE(a == b);
    REQUIRE_FALSE(a.empty());
}

TEST_CASE("budget truncation is reported") {
    ClassifyResult r = classify(2, 12, minimal_smooth_2fans(9), 3);
    REQUIRE_FALSE(r.complete);
    REQUIRE(r.stats.fans_explored <= 3);
}

TEST_CASE("threaded runs agree with the serial result") {
    ClassifyResult serial = classify(2, 7, minimal_smooth_2fans(4), 0, 1);
    ClassifyResult threaded = classify(2, 7, minimal_smooth_2fans(4), 0, 4);
    REQUIRE(serial.classes.size() == threaded.classes.size());
    for (size_t i = 0; i < serial.classes.size(); ++i)
        REQUIRE(serial.classes[i].form == threaded.classes[i].form);
}
