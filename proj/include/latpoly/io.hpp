#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "classify.hpp"
#include "cone.hpp"
#include "core.hpp"
#include "equivalence.hpp"
#include "fan.hpp"
#include "polytope.hpp"
#include "triangulate.hpp"

namespace latpoly {

using Json = nlohmann::ordered_json;

inline long long int_to_ll(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v < lo || v > hi) throw std::invalid_argument("coordinate out of range");
    return v.convert_to<long long>();
}

inline Json vec_to_json(const Vec& v) {
    Json j = Json::array();
    for (const Int& x : v) j.push_back(int_to_ll(x));
    return j;
}

inline Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array");
    Vec v;
    for (const Json& x : j) v.push_back(Int(x.get<long long>()));
    return v;
}

inline Json mat_to_json(const Mat& m) {
    Json j = Json::array();
    for (const Vec& v : m) j.push_back(vec_to_json(v));
    return j;
}

inline Mat mat_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array");
    Mat m;
    for (const Json& v : j) m.push_back(vec_from_json(v));
    return m;
}

inline Json polytope_to_json(const LatticePolytope& p) {
    Json j;
    j["dim"] = p.dim;
    j["vertices"] = mat_to_json(p.vertices);
    return j;
}

inline LatticePolytope polytope_from_json(const Json& j) {
    LatticePolytope p = hull_from_points(mat_from_json(j.at("vertices")));
    if (j.contains("dim") && j.at("dim").get<int>() != p.dim)
        throw std::invalid_argument("dimension mismatch");
    return p;
}

inline Json fan_to_json(const Fan& f) {
    Json j;
    j["dim"] = f.dim;
    j["rays"] = mat_to_json(f.rays);
    Json cones = Json::array();
    for (const auto& c : f.maximal_cones) cones.push_back(c);
    j["cones"] = cones;
    return j;
}

inline Fan fan_from_json(const Json& j) {
    Mat rays = mat_from_json(j.at("rays"));
    std::vector<std::vector<int>> cones;
    for (const Json& c : j.at("cones")) cones.push_back(c.get<std::vector<int>>());
    return make_fan(std::move(rays), std::move(cones));
}

inline Json cone_to_json(const RationalCone& c) {
    Json j;
    j["rays"] = mat_to_json(c.generators);
    return j;
}

inline RationalCone cone_from_json(const Json& j) { return make_cone(mat_from_json(j.at("rays"))); }

// Stable 64-bit id of a canonical form: FNV-1a over its plain serialization.
inline std::string canonical_id(const CanonicalForm& cf) {
    std::string s = std::to_string(cf.dim) + "|";
    for (const Vec& v : cf.vertex_list) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += v[i].str();
        }
        s += ';';
    }
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

struct ClassRecordFlags {
    bool smooth = false;
    bool very_ample = false;
    bool flag_triangulation_found = false;
};

struct ClassRecord {
    std::string id;
    int dim = 0;
    int num_vertices = 0;
    int num_lattice_points = 0;
    Mat vertices;
    Fan source_fan;
    ClassRecordFlags flags;
};

inline ClassRecord make_class_record(const ClassifiedClass& cls, bool flag_triangulation_found) {
    ClassRecord r;
    r.id = canonical_id(cls.form);
    r.dim = cls.rep.dim;
    r.num_vertices = int(cls.rep.vertices.size());
    r.num_lattice_points = int(cls.rep.lattice_points.size());
    r.vertices = cls.rep.vertices;
    r.source_fan = cls.source_fan;
    r.flags.smooth = is_smooth(cls.rep);
    r.flags.very_ample = is_very_ample(cls.rep);
    r.flags.flag_triangulation_found = flag_triangulation_found;
    return r;
}

inline Json class_record_to_json(const ClassRecord& r) {
    Json j;
    j["id"] = r.id;
    j["dim"] = r.dim;
    j["num_vertices"] = r.num_vertices;
    j["num_lattice_points"] = r.num_lattice_points;
    j["vertices"] = mat_to_json(r.vertices);
    j["source_fan"] = fan_to_json(r.source_fan);
    j["flags"] = Json{{"smooth", r.flags.smooth},
                      {"very_ample", r.flags.very_ample},
                      {"flag_triangulation_found", r.flags.flag_triangulation_found}};
    return j;
}

inline ClassRecord class_record_from_json(const Json& j) {
    ClassRecord r;
    r.id = j.at("id").get<std::string>();
    r.dim = j.at("dim").get<int>();
    r.num_vertices = j.at("num_vertices").get<int>();
    r.num_lattice_points = j.at("num_lattice_points").get<int>();
    r.vertices = mat_from_json(j.at("vertices"));
    r.source_fan = fan_from_json(j.at("source_fan"));
    const Json& f = j.at("flags");
    r.flags.smooth = f.at("smooth").get<bool>();
    r.flags.very_ample = f.at("very_ample").get<bool>();
    r.flags.flag_triangulation_found = f.at("flag_triangulation_found").get<bool>();
    return r;
}

// Records are kept sorted by (lattice points, vertices, id).
inline void sort_records(std::vector<ClassRecord>& records) {
    std::sort(records.begin(), records.end(), [](const ClassRecord& a, const ClassRecord& b) {
        if (a.num_lattice_points != b.num_lattice_points)
            return a.num_lattice_points < b.num_lattice_points;
        if (a.num_vertices != b.num_vertices) return a.num_vertices < b.num_vertices;
        return a.id < b.id;
    });
}

// Line-delimited record streams: one compact JSON object per line.
inline void write_records(std::ostream& os, const std::vector<ClassRecord>& records) {
    for (const ClassRecord& r : records) os << class_record_to_json(r).dump() << '\n';
}

inline std::vector<ClassRecord> read_records(std::istream& is) {
    std::vector<ClassRecord> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        out.push_back(class_record_from_json(Json::parse(line)));
    }
    return out;
}

inline Json triangulation_to_json(const TriangulationCertificate& cert) {
    Json j;
    j["attempt"] = cert.attempt;
    j["order"] = mat_to_json(cert.order);
    Json simplices = Json::array();
    for (const Mat& s : cert.simplices) simplices.push_back(mat_to_json(s));
    j["simplices"] = simplices;
    return j;
}

}  // namespace latpoly
