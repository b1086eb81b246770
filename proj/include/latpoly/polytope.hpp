#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "core.hpp"

namespace latpoly {

// Facet inequality <normal, x> <= offset with outward primitive normal.
struct Facet {
    Vec normal;
    Int offset;
};

// Immutable lattice polytope of dimension 1..3. All caches are filled at
// construction time by hull_from_points. For polytopes whose affine span is
// a proper subspace of the ambient lattice the facet list is left empty;
// vertices, edges and lattice points are still exact.
struct LatticePolytope {
    int dim = 0;
    Mat vertices;                            // lexicographically sorted
    std::vector<Facet> facets;
    std::vector<std::pair<int, int>> edges;  // index pairs, first < second
    Mat lattice_points;                      // lexicographically sorted

    size_t ambient_dim() const { return vertices.empty() ? 0 : vertices[0].size(); }
};

namespace detail {

inline Vec cross3(const Vec& a, const Vec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Int cross2(const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Counter-clockwise convex hull of distinct 2d points, via monotone chain.
inline Mat hull2d_ccw(Mat pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    size_t n = pts.size();
    if (n <= 2) return pts;
    Mat h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

inline bool satisfies_all(const std::vector<Facet>& facets, const Vec& x) {
    for (const Facet& f : facets)
        if (dot(f.normal, x) > f.offset) return false;
    return true;
}

inline Mat lattice_points_box_filter(const std::vector<Facet>& facets, const Mat& vertices) {
    size_t d = vertices[0].size();
    Vec lo = vertices[0], hi = vertices[0];
    for (const Vec& v : vertices)
        for (size_t i = 0; i < d; ++i) {
            if (v[i] < lo[i]) lo[i] = v[i];
            if (v[i] > hi[i]) hi[i] = v[i];
        }
    Mat out;
    Vec x = lo;
    for (;;) {
        if (satisfies_all(facets, x)) out.push_back(x);
        size_t i = 0;
        while (i < d && x[i] == hi[i]) x[i] = lo[i], ++i;
        if (i == d) break;
        ++x[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline LatticePolytope build_segment(const Mat& pts) {
    Vec a = pts[0], b = pts[0];
    for (const Vec& p : pts) {
        if (p < a) a = p;
        if (b < p) b = p;
    }
    LatticePolytope p;
    p.dim = 1;
    p.vertices = {a, b};
    p.edges = {{0, 1}};
    Int len = segment_lattice_length(a, b);
    Vec step = primitive_vector(vec_sub(b, a));
    Vec x = a;
    for (Int t = 0; t <= len; ++t) {
        p.lattice_points.push_back(x);
        x = vec_add(x, step);
    }
    std::sort(p.lattice_points.begin(), p.lattice_points.end());
    return p;
}

inline LatticePolytope build_polygon(const Mat& pts) {
    Mat ring = hull2d_ccw(pts);
    size_t n = ring.size();
    LatticePolytope p;
    p.dim = 2;
    std::vector<Facet> facets;
    std::vector<std::pair<int, int>> ring_edges;
    for (size_t i = 0; i < n; ++i) {
        const Vec& a = ring[i];
        const Vec& b = ring[(i + 1) % n];
        Vec normal = primitive_vector({b[1] - a[1], a[0] - b[0]});
        facets.push_back({normal, dot(normal, a)});
        ring_edges.push_back({int(i), int((i + 1) % n)});
    }
    std::vector<int> order(n);
    std::vector<int> rank(n);
    for (size_t i = 0; i < n; ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return ring[x] < ring[y]; });
    for (size_t i = 0; i < n; ++i) rank[order[i]] = int(i);
    for (int i : order) p.vertices.push_back(ring[i]);
    for (auto [a, b] : ring_edges) {
        int x = rank[a], y = rank[b];
        p.edges.push_back({std::min(x, y), std::max(x, y)});
    }
    std::sort(p.edges.begin(), p.edges.end());
    p.facets = std::move(facets);
    p.lattice_points = lattice_points_box_filter(p.facets, p.vertices);
    return p;
}

inline LatticePolytope build_3polytope(const Mat& pts) {
    size_t n = pts.size();
    std::set<std::pair<Vec, Int>> seen;
    std::vector<Facet> facets;
    std::vector<std::vector<int>> incident;  // facet -> supporting point indices
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                Vec nrm = cross3(vec_sub(pts[j], pts[i]), vec_sub(pts[k], pts[i]));
                if (is_zero_vec(nrm)) continue;
                nrm = primitive_vector(nrm);
                Int off = dot(nrm, pts[i]);
                int side = 0;
                bool flat = true;
                for (size_t t = 0; t < n && flat; ++t) {
                    int s = int_sign(dot(nrm, pts[t]) - off);
                    if (s == 0) continue;
                    if (side == 0) side = s;
                    else if (s != side) flat = false;
                }
                if (!flat || side == 0) continue;
                if (side > 0) { nrm = vec_neg(nrm); off = -off; }
                if (!seen.insert({nrm, off}).second) continue;
                std::vector<int> on;
                for (size_t t = 0; t < n; ++t)
                    if (dot(nrm, pts[t]) == off) on.push_back(int(t));
                facets.push_back({nrm, off});
                incident.push_back(on);
            }

    // A point is a vertex iff its incident facet normals span rank 3.
    std::vector<int> vertex_of(n, -1);
    Mat verts;
    for (size_t t = 0; t < n; ++t) {
        Mat nm;
        for (size_t f = 0; f < facets.size(); ++f)
            if (dot(facets[f].normal, pts[t]) == facets[f].offset) nm.push_back(facets[f].normal);
        if (nm.size() >= 3 && mat_rank(nm) == 3) {
            vertex_of[t] = int(verts.size());
            verts.push_back(pts[t]);
        }
    }
    std::vector<int> order(verts.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return verts[a] < verts[b]; });
    std::vector<int> rank(verts.size());
    for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = int(i);

    LatticePolytope p;
    p.dim = 3;
    for (int i : order) p.vertices.push_back(verts[i]);
    p.facets = facets;

    // Edges: order each facet's vertices around its polygon and take
    // consecutive pairs. Project out a coordinate where the normal is nonzero.
    std::set<std::pair<int, int>> edge_set;
    for (size_t f = 0; f < facets.size(); ++f) {
        std::vector<int> fv;
        for (int t : incident[f])
            if (vertex_of[t] >= 0) fv.push_back(vertex_of[t]);
        size_t axis = 0;
        while (facets[f].normal[axis] == 0) ++axis;
        Mat proj;
        for (int v : fv) {
            Vec q;
            for (size_t c = 0; c < 3; ++c)
                if (c != axis) q.push_back(verts[v][c]);
            proj.push_back(q);
        }
        Mat ring = hull2d_ccw(proj);
        std::vector<int> cyc;
        for (const Vec& q : ring)
            for (size_t i = 0; i < fv.size(); ++i)
                if (proj[i] == q) { cyc.push_back(fv[i]); break; }
        for (size_t i = 0; i < cyc.size(); ++i) {
            int a = rank[cyc[i]], b = rank[cyc[(i + 1) % cyc.size()]];
            edge_set.insert({std::min(a, b), std::max(a, b)});
        }
    }
    p.edges.assign(edge_set.begin(), edge_set.end());

    long long v = (long long)p.vertices.size(), e = (long long)p.edges.size(),
              fc = (long long)p.facets.size();
    if (v - e + fc != 2) throw std::logic_error("hull failed Euler check");

    p.lattice_points = lattice_points_box_filter(p.facets, p.vertices);
    return p;
}

}  // namespace detail

inline LatticePolytope hull_from_points(Mat points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.empty()) throw std::invalid_argument("not full-dimensional");
    size_t amb = points[0].size();
    Mat diffs;
    for (size_t i = 1; i < points.size(); ++i) diffs.push_back(vec_sub(points[i], points[0]));
    size_t d = diffs.empty() ? 0 : mat_rank(diffs);
    if (d == 0) throw std::invalid_argument("not full-dimensional");

    if (d == amb) {
        if (d == 1) return detail::build_segment(points);
        if (d == 2) return detail::build_polygon(points);
        if (d == 3) return detail::build_3polytope(points);
        throw std::invalid_argument("dimension out of range");
    }

    // Lower-dimensional input: map span(P) onto Z^d through a saturated
    // lattice basis, build there, then map everything back.
    Mat basis = span_lattice_basis(diffs, amb);
    Mat bt = mat_transpose(basis);
    Mat reduced;
    for (const Vec& pt : points) {
        Vec diff = vec_sub(pt, points[0]);
        std::vector<Rat> rhs(diff.size()), y;
        for (size_t i = 0; i < diff.size(); ++i) rhs[i] = Rat(diff[i]);
        if (!solve_rational(bt, rhs, y)) throw std::logic_error("span basis failed");
        Vec q;
        for (const Rat& c : y) {
            if (boost::multiprecision::denominator(c) != 1)
                throw std::logic_error("span basis not saturated");
            q.push_back(boost::multiprecision::numerator(c));
        }
        reduced.push_back(q);
    }
    LatticePolytope rp = hull_from_points(reduced);
    auto lift = [&](const Vec& q) {
        Vec x = points[0];
        for (size_t i = 0; i < q.size(); ++i) x = vec_add(x, vec_scale(q[i], basis[i]));
        return x;
    };
    LatticePolytope p;
    p.dim = rp.dim;
    for (const Vec& q : rp.vertices) p.vertices.push_back(lift(q));
    for (const Vec& q : rp.lattice_points) p.lattice_points.push_back(lift(q));
    std::vector<int> order(p.vertices.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return p.vertices[a] < p.vertices[b]; });
    std::vector<int> rk(order.size());
    for (size_t i = 0; i < order.size(); ++i) rk[order[i]] = int(i);
    Mat sorted_verts;
    for (int i : order) sorted_verts.push_back(p.vertices[i]);
    p.vertices = std::move(sorted_verts);
    for (auto [a, b] : rp.edges) {
        int x = rk[a], y = rk[b];
        p.edges.push_back({std::min(x, y), std::max(x, y)});
    }
    std::sort(p.edges.begin(), p.edges.end());
    std::sort(p.lattice_points.begin(), p.lattice_points.end());
    return p;
}

inline const Mat& lattice_points(const LatticePolytope& p) { return p.lattice_points; }

inline bool polytope_contains(const LatticePolytope& p, const Vec& x) {
    return detail::satisfies_all(p.facets, x);
}

namespace detail {

inline Int volume_from_apex(const LatticePolytope& p, size_t apex) {
    const Vec& v0 = p.vertices[apex];
    Int total = 0;
    if (p.dim == 1) return segment_lattice_length(p.vertices[0], p.vertices[1]);
    if (p.dim == 2) {
        for (auto [a, b] : p.edges) {
            if (size_t(a) == apex || size_t(b) == apex) continue;
            total += int_abs(cross2(v0, p.vertices[a], p.vertices[b]));
        }
        return total;
    }
    for (const Facet& f : p.facets) {
        if (dot(f.normal, v0) == f.offset) continue;
        std::vector<int> fv;
        for (size_t i = 0; i < p.vertices.size(); ++i)
            if (dot(f.normal, p.vertices[i]) == f.offset) fv.push_back(int(i));
        for (auto [a, b] : p.edges) {
            if (a == fv[0] || b == fv[0]) continue;
            if (dot(f.normal, p.vertices[a]) != f.offset) continue;
            if (dot(f.normal, p.vertices[b]) != f.offset) continue;
            Mat m = {vec_sub(p.vertices[fv[0]], v0), vec_sub(p.vertices[a], v0),
                     vec_sub(p.vertices[b], v0)};
            total += int_abs(det(m));
        }
    }
    return total;
}

}  // namespace detail

inline Int normalized_volume(const LatticePolytope& p) {
    if (p.dim == int(p.ambient_dim())) return detail::volume_from_apex(p, 0);
    Mat diffs;
    for (size_t i = 1; i < p.vertices.size(); ++i)
        diffs.push_back(vec_sub(p.vertices[i], p.vertices[0]));
    Mat basis = span_lattice_basis(diffs, p.ambient_dim());
    Mat bt = mat_transpose(basis);
    Mat reduced;
    for (const Vec& v : p.vertices) {
        Vec diff = vec_sub(v, p.vertices[0]);
        std::vector<Rat> rhs(diff.size()), y;
        for (size_t i = 0; i < diff.size(); ++i) rhs[i] = Rat(diff[i]);
        solve_rational(bt, rhs, y);
        Vec q;
        for (const Rat& c : y) q.push_back(boost::multiprecision::numerator(c));
        reduced.push_back(q);
    }
    return detail::volume_from_apex(hull_from_points(reduced), 0);
}

inline int vertex_index(const LatticePolytope& p, const Vec& u) {
    for (size_t i = 0; i < p.vertices.size(); ++i)
        if (p.vertices[i] == u) return int(i);
    return -1;
}

// Primitive edge directions at the vertex u.
inline Mat edge_directions_at(const LatticePolytope& p, const Vec& u) {
    int ui = vertex_index(p, u);
    if (ui < 0) throw std::invalid_argument("not a vertex");
    Mat dirs;
    for (auto [a, b] : p.edges) {
        if (a == ui) dirs.push_back(primitive_vector(vec_sub(p.vertices[b], u)));
        else if (b == ui) dirs.push_back(primitive_vector(vec_sub(p.vertices[a], u)));
    }
    std::sort(dirs.begin(), dirs.end());
    return dirs;
}

inline Int edge_lattice_point_count(const LatticePolytope& p) {
    Int total = Int(p.vertices.size());
    for (auto [a, b] : p.edges)
        total += segment_lattice_length(p.vertices[a], p.vertices[b]) - 1;
    return total;
}

inline LatticePolytope dilate(const LatticePolytope& p, const Int& k) {
    if (k <= 0) throw std::invalid_argument("dilation factor must be positive");
    Mat scaled;
    for (const Vec& v : p.vertices) scaled.push_back(vec_scale(k, v));
    return hull_from_points(scaled);
}

}  // namespace latpoly
