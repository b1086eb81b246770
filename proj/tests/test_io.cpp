#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

#include <sstream>

using namespace latpoly;
using testutil::pts2;

TEST_CASE("polytope json round trip") {
    LatticePolytope p = hull_from_points(pts2({{0, 0}, {3, 0}, {0, 2}, {3, 2}}));
    Json j = polytope_to_json(p);
    LatticePolytope q = polytope_from_json(j);
    REQUIRE(q.vertices == p.vertices);
    REQUIRE(q.lattice_points == p.lattice_points);
    REQUIRE(polytope_to_json(q).dump() == j.dump());
}

TEST_CASE("fan json round trip") {
    Fan f = normal_fan(hull_from_points(pts2({{0, 0}, {2, 0}, {0, 1}, {2, 1}})));
    Json j = fan_to_json(f);
    Fan g = fan_from_json(j);
    REQUIRE(g == f);
    REQUIRE(fan_to_json(g).dump() == j.dump());
}

TEST_CASE("cone json round trip") {
    RationalCone c = make_cone({{Int(1), Int(0)}, {Int(2), Int(5)}});
    RationalCone d = cone_from_json(cone_to_json(c));
    REQUIRE(d.generators == c.generators);
}

TEST_CASE("json rejects malformed input") {
    REQUIRE_THROWS(polytope_from_json(Json::parse(R"({"vertices": "nope"})")));
    REQUIRE_THROWS(polytope_from_json(Json::parse(R"({"dim": 3, "vertices": [[0,0],[1,0],[0,1]]})")));
    REQUIRE_THROWS(fan_from_json(Json::parse(R"({"rays": [[1,0]], "cones": [[0]]})")));
}

TEST_CASE("canonical ids are stable and translation invariant") {
    LatticePolytope a = hull_from_points(pts2({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    LatticePolytope b = hull_from_points(pts2({{7, -2}, {8, -2}, {7, -1}, {8, -1}}));
    std::string ida = canonical_id(canonical_form_smooth(a));
    std::string idb = canonical_id(canonical_form_smooth(b));
    REQUIRE(ida == idb);
    REQUIRE(ida.size() == 16);
    std::string idt = canonical_id(canonical_form_smooth(
        hull_from_points(pts2({{0, 0}, {1, 0}, {0, 1}}))));
    REQUIRE(idt != ida);
}

TEST_CASE("class records round trip byte for byte") {
    ClassifyResult res = classify(2, 6, minimal_smooth_2fans(3));
    std::vector<ClassRecord> records;
    for (const auto& cls : res.classes) records.push_back(make_class_record(cls, true));
    sort_records(records);

    std::ostringstream first;
    write_records(first, records);

    std::istringstream back(first.str());
    std::vector<ClassRecord> reread = read_records(back);
    REQUIRE(reread.size() == records.size());

    std::ostringstream second;
    write_records(second, reread);
    REQUIRE(second.str() == first.str());

    for (size_t i = 0; i < records.size(); ++i) {
        REQUIRE(reread[i].id == records[i].id);
        REQUIRE(reread[i].vertices == records[i].vertices);
        REQUIRE(reread[i].flags.smooth == records[i].flags.smooth);
        REQUIRE(reread[i].flags.very_ample == records[i].flags.very_ample);
    }
}

TEST_CASE("records carry the expected flags") {
    ClassifyResult res = classify(2, 4, minimal_smooth_2fans(1));
    REQUIRE(res.classes.size() == 2);
    for (const auto& cls : res.classes) {
        ClassRecord rec = make_class_record(cls, false);
        REQUIRE(rec.flags.smooth);
        REQUIRE(rec.flags.very_ample);
        REQUIRE_FALSE(rec.flags.flag_triangulation_found);
        REQUIRE(rec.dim == 2);
        REQUIRE(rec.num_vertices == int(cls.rep.vertices.size()));
        REQUIRE(rec.num_lattice_points == int(cls.rep.lattice_points.size()));
    }
}

TEST_CASE("triangulation certificates serialize") {
    LatticePolytope square = hull_from_points(pts2({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    auto cert = find_flag_unimodular_regular(square, 10);
    REQUIRE(cert.has_value());
    Json j = triangulation_to_json(*cert);
    REQUIRE(j.at("attempt").get<unsigned long long>() == cert->attempt);
    REQUIRE(j.at("order").size() == 4);
    REQUIRE(j.at("simplices").size() == 2);
}
