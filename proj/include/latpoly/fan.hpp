#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "cone.hpp"
#include "core.hpp"
#include "polytope.hpp"

namespace latpoly {

// Complete rational fan given by primitive rays and maximal cones as ray
// index sets. Stored normalized: rays lexicographically sorted, every cone
// sorted ascending, cone list sorted.
struct Fan {
    int dim = 0;
    Mat rays;
    std::vector<std::vector<int>> maximal_cones;
};

inline bool operator<(const Fan& a, const Fan& b) {
    if (a.rays != b.rays) return a.rays < b.rays;
    return a.maximal_cones < b.maximal_cones;
}

inline bool operator==(const Fan& a, const Fan& b) {
    return a.dim == b.dim && a.rays == b.rays && a.maximal_cones == b.maximal_cones;
}

namespace detail {

inline void normalize_fan(Fan& f) {
    size_t n = f.rays.size();
    std::vector<int> order(n), rank(n);
    for (size_t i = 0; i < n; ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return f.rays[a] < f.rays[b]; });
    for (size_t i = 0; i < n; ++i) rank[order[i]] = int(i);
    Mat sorted;
    for (int i : order) sorted.push_back(f.rays[i]);
    f.rays = std::move(sorted);
    for (auto& c : f.maximal_cones) {
        for (int& i : c) i = rank[i];
        std::sort(c.begin(), c.end());
    }
    std::sort(f.maximal_cones.begin(), f.maximal_cones.end());
}

// Angular (counter-clockwise) order of 2d rays starting in the upper half.
inline std::vector<int> angular_order_2d(const Mat& rays) {
    auto half = [](const Vec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
    std::vector<int> idx(rays.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int ha = half(rays[a]), hb = half(rays[b]);
        if (ha != hb) return ha < hb;
        Int c = rays[a][0] * rays[b][1] - rays[a][1] * rays[b][0];
        return c > 0;
    });
    return idx;
}

// Ray-index sets of the facets of a maximal cone.
inline std::vector<std::vector<int>> cone_facets(const Fan& f, const std::vector<int>& cone) {
    std::vector<std::vector<int>> out;
    if (f.dim == 2) {
        for (int i : cone) out.push_back({i});
        return out;
    }
    if (cone.size() == 3) {
        out = {{cone[0], cone[1]}, {cone[0], cone[2]}, {cone[1], cone[2]}};
        return out;
    }
    Mat pts;
    for (int i : cone) pts.push_back(f.rays[i]);
    pts.push_back(zero_vec(f.dim));
    LatticePolytope q = hull_from_points(pts);
    for (const Facet& fc : q.facets) {
        if (fc.offset != 0) continue;
        std::vector<int> face;
        for (int i : cone)
            if (dot(fc.normal, f.rays[i]) == 0) face.push_back(i);
        if (face.size() >= 2) out.push_back(face);
    }
    return out;
}

}  // namespace detail

inline Fan make_fan(Mat rays, std::vector<std::vector<int>> cones) {
    if (rays.empty() || cones.empty()) throw std::invalid_argument("malformed fan");
    int dim = int(rays[0].size());
    std::set<Vec> seen;
    for (const Vec& r : rays) {
        if (is_zero_vec(r) || r != primitive_vector(r) || !seen.insert(r).second)
            throw std::invalid_argument("malformed fan");
    }
    for (const auto& c : cones) {
        if (c.empty()) throw std::invalid_argument("malformed fan");
        Mat gens;
        for (int i : c) {
            if (i < 0 || size_t(i) >= rays.size()) throw std::invalid_argument("malformed fan");
            gens.push_back(rays[i]);
        }
        if (mat_rank(gens) != size_t(dim) || !detail::is_pointed_gens(gens))
            throw std::invalid_argument("malformed fan");
    }
    Fan f{dim, std::move(rays), std::move(cones)};
    detail::normalize_fan(f);
    return f;
}

inline Fan normal_fan(const LatticePolytope& p) {
    if (p.dim != int(p.ambient_dim()) || p.facets.empty())
        throw std::invalid_argument("not full-dimensional");
    Mat rays;
    for (const Facet& f : p.facets) rays.push_back(f.normal);
    std::vector<std::vector<int>> cones;
    for (const Vec& v : p.vertices) {
        std::vector<int> c;
        for (size_t i = 0; i < p.facets.size(); ++i)
            if (dot(p.facets[i].normal, v) == p.facets[i].offset) c.push_back(int(i));
        cones.push_back(c);
    }
    return make_fan(std::move(rays), std::move(cones));
}

inline bool fan_is_smooth(const Fan& f) {
    for (const auto& c : f.maximal_cones) {
        if (c.size() != size_t(f.dim)) return false;
        Mat gens;
        for (int i : c) gens.push_back(f.rays[i]);
        if (int_abs(det(gens)) != 1) return false;
    }
    return true;
}

inline bool fan_is_complete(const Fan& f) {
    if (f.dim == 2) {
        size_t n = f.rays.size();
        if (n < 3 || f.maximal_cones.size() != n) return false;
        std::vector<int> order = detail::angular_order_2d(f.rays);
        std::set<std::vector<int>> expected;
        for (size_t i = 0; i < n; ++i) {
            int a = order[i], b = order[(i + 1) % n];
            Int c = f.rays[a][0] * f.rays[b][1] - f.rays[a][1] * f.rays[b][0];
            if (c <= 0) return false;
            std::vector<int> cone = {std::min(a, b), std::max(a, b)};
            expected.insert(cone);
        }
        std::set<std::vector<int>> got(f.maximal_cones.begin(), f.maximal_cones.end());
        return got == expected;
    }
    // dim 3: every facet of every maximal cone is a wall of exactly two
    // cones, with the two cones on opposite sides.
    std::map<std::vector<int>, std::vector<size_t>> walls;
    for (size_t ci = 0; ci < f.maximal_cones.size(); ++ci)
        for (const auto& w : detail::cone_facets(f, f.maximal_cones[ci])) walls[w].push_back(ci);
    for (const auto& [w, owners] : walls) {
        if (owners.size() != 2) return false;
        Vec n = primitive_vector(detail::cross3(f.rays[w[0]], f.rays[w[1]]));
        int side[2] = {0, 0};
        for (int t = 0; t < 2; ++t) {
            for (int i : f.maximal_cones[owners[t]]) {
                int s = int_sign(dot(n, f.rays[i]));
                if (s == 0) continue;
                if (side[t] == 0) side[t] = s;
                else if (side[t] != s) return false;
            }
            if (side[t] == 0) return false;
        }
        if (side[0] == side[1]) return false;
    }
    return true;
}

inline Fan blow_up_fan(const Fan& f, std::vector<int> face) {
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    if (face.size() < 2) throw std::invalid_argument("face not a face of the fan");
    auto contains_face = [&](const std::vector<int>& cone) {
        return std::includes(cone.begin(), cone.end(), face.begin(), face.end());
    };
    bool found = false;
    for (const auto& c : f.maximal_cones)
        if (contains_face(c)) { found = true; break; }
    if (!found) throw std::invalid_argument("face not a face of the fan");

    Vec sum = zero_vec(f.dim);
    for (int i : face) {
        if (i < 0 || size_t(i) >= f.rays.size())
            throw std::invalid_argument("face not a face of the fan");
        sum = vec_add(sum, f.rays[i]);
    }
    Vec nray = primitive_vector(sum);
    Mat rays = f.rays;
    int ni = int(rays.size());
    rays.push_back(nray);
    std::vector<std::vector<int>> cones;
    for (const auto& c : f.maximal_cones) {
        if (!contains_face(c)) {
            cones.push_back(c);
            continue;
        }
        for (int drop : face) {
            std::vector<int> nc;
            for (int i : c)
                if (i != drop) nc.push_back(i);
            nc.push_back(ni);
            std::sort(nc.begin(), nc.end());
            cones.push_back(nc);
        }
    }
    Fan out{f.dim, std::move(rays), std::move(cones)};
    detail::normalize_fan(out);
    return out;
}

inline std::optional<int> find_blow_down(const Fan& f) {
    std::vector<int> order = detail::angular_order_2d(f.rays);
    size_t n = order.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec& prev = f.rays[order[(i + n - 1) % n]];
        const Vec& cur = f.rays[order[i]];
        const Vec& next = f.rays[order[(i + 1) % n]];
        if (vec_add(prev, next) == cur) return order[i];
    }
    return std::nullopt;
}

}  // namespace latpoly
