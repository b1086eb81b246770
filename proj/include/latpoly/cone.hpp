#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "core.hpp"
#include "polytope.hpp"

namespace latpoly {

// Pointed rational cone, generators primitive and irredundant, sorted.
struct RationalCone {
    int dim_ambient = 0;
    Mat generators;
};

struct GorensteinData {
    std::vector<Rat> height;
    Int index = 1;
    bool is_gorenstein = true;
};

namespace detail {

// Does some lambda >= 0 solve sum(lambda_i gens_i) = x? Carathéodory: it is
// enough to scan spanning subsets of size <= 3.
inline bool nonneg_combination(const Mat& gens, const Vec& x) {
    if (is_zero_vec(x)) return true;
    size_t n = gens.size();
    std::vector<Rat> rhs(x.size());
    for (size_t i = 0; i < x.size(); ++i) rhs[i] = Rat(x[i]);
    std::vector<std::vector<size_t>> subsets;
    for (size_t a = 0; a < n; ++a) {
        subsets.push_back({a});
        for (size_t b = a + 1; b < n; ++b) {
            subsets.push_back({a, b});
            for (size_t c = b + 1; c < n; ++c) subsets.push_back({a, b, c});
        }
    }
    for (const auto& sub : subsets) {
        Mat cols(x.size(), Vec(sub.size()));
        for (size_t j = 0; j < sub.size(); ++j)
            for (size_t i = 0; i < x.size(); ++i) cols[i][j] = gens[sub[j]][i];
        std::vector<Rat> lam;
        if (!solve_rational(cols, rhs, lam)) continue;
        bool ok = true;
        for (const Rat& l : lam)
            if (l < 0) { ok = false; break; }
        if (!ok) continue;
        std::vector<Rat> check(x.size(), Rat(0));
        for (size_t j = 0; j < sub.size(); ++j)
            for (size_t i = 0; i < x.size(); ++i) check[i] += lam[j] * Rat(gens[sub[j]][i]);
        for (size_t i = 0; i < x.size() && ok; ++i)
            if (check[i] != Rat(x[i])) ok = false;
        if (ok) return true;
    }
    return false;
}

inline bool is_pointed_gens(const Mat& gens) {
    // Pointed iff 0 is not a convex combination of the generators.
    size_t n = gens.size();
    if (n == 0) return true;
    size_t d = gens[0].size();
    std::vector<std::vector<size_t>> subsets;
    std::vector<size_t> idx;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a; b < n; ++b)
            for (size_t c = b; c < n; ++c)
                for (size_t e = c; e < n; ++e) {
                    std::set<size_t> s = {a, b, c, e};
                    subsets.push_back(std::vector<size_t>(s.begin(), s.end()));
                }
    for (const auto& sub : subsets) {
        Mat rows(d + 1, Vec(sub.size()));
        std::vector<Rat> rhs(d + 1, Rat(0));
        rhs[d] = Rat(1);
        for (size_t j = 0; j < sub.size(); ++j) {
            for (size_t i = 0; i < d; ++i) rows[i][j] = gens[sub[j]][i];
            rows[d][j] = 1;
        }
        std::vector<Rat> lam;
        if (!solve_rational(rows, rhs, lam)) continue;
        bool ok = true;
        for (const Rat& l : lam)
            if (l < 0) { ok = false; break; }
        if (ok) return false;
    }
    return true;
}

}  // namespace detail

inline RationalCone make_cone(Mat gens) {
    if (gens.empty()) throw std::invalid_argument("cone needs generators");
    size_t amb = gens[0].size();
    Mat prim;
    for (const Vec& g : gens)
        if (!is_zero_vec(g)) prim.push_back(primitive_vector(g));
    std::sort(prim.begin(), prim.end());
    prim.erase(std::unique(prim.begin(), prim.end()), prim.end());
    if (prim.empty()) throw std::invalid_argument("cone needs generators");
    Mat kept;
    for (size_t i = 0; i < prim.size(); ++i) {
        Mat others;
        for (size_t j = 0; j < prim.size(); ++j)
            if (j != i) others.push_back(prim[j]);
        if (others.empty() || !detail::nonneg_combination(others, prim[i]))
            kept.push_back(prim[i]);
    }
    return RationalCone{int(amb), kept};
}

inline bool is_pointed(const RationalCone& c) { return detail::is_pointed_gens(c.generators); }

inline bool is_simplicial(const RationalCone& c) {
    return c.generators.size() == mat_rank(c.generators);
}

inline bool is_unimodular(const RationalCone& c) {
    if (!is_simplicial(c)) return false;
    if (c.generators.size() != size_t(c.dim_ambient)) return false;
    return int_abs(det(c.generators)) == 1;
}

inline std::optional<GorensteinData> gorenstein_data(const RationalCone& c) {
    std::vector<Rat> ones(c.generators.size(), Rat(1)), h;
    if (!solve_rational(c.generators, ones, h)) return std::nullopt;
    Mat basis = span_lattice_basis(c.generators, c.dim_ambient);
    Int index = 1;
    for (const Vec& b : basis) {
        Rat v = rat_dot(h, b);
        index = lcm_int(index, Int(boost::multiprecision::denominator(v)));
    }
    return GorensteinData{h, index, index == 1};
}

inline LatticePolytope nib(const RationalCone& c) {
    if (!gorenstein_data(c)) throw std::domain_error("not Q-Gorenstein");
    Mat pts = c.generators;
    pts.push_back(zero_vec(c.dim_ambient));
    return hull_from_points(pts);
}

inline Mat nib_lattice_points(const RationalCone& c) { return nib(c).lattice_points; }

inline Int multiplicity(const RationalCone& c) { return normalized_volume(nib(c)); }

inline Mat box_points(const RationalCone& c) {
    if (!is_simplicial(c)) throw std::invalid_argument("not simplicial");
    size_t d = c.generators.size();
    if (d != size_t(c.dim_ambient)) throw std::invalid_argument("not full-dimensional");
    Vec lo = zero_vec(d), hi = zero_vec(d);
    for (size_t mask = 0; mask < (size_t(1) << d); ++mask) {
        Vec corner = zero_vec(d);
        for (size_t i = 0; i < d; ++i)
            if (mask & (size_t(1) << i)) corner = vec_add(corner, c.generators[i]);
        for (size_t i = 0; i < d; ++i) {
            if (corner[i] < lo[i]) lo[i] = corner[i];
            if (corner[i] > hi[i]) hi[i] = corner[i];
        }
    }
    Mat cols = mat_transpose(c.generators);
    Mat out;
    Vec x = lo;
    for (;;) {
        std::vector<Rat> rhs(d), lam;
        for (size_t i = 0; i < d; ++i) rhs[i] = Rat(x[i]);
        if (solve_rational(cols, rhs, lam)) {
            bool in = true;
            for (const Rat& l : lam)
                if (l < 0 || l >= 1) { in = false; break; }
            if (in) out.push_back(x);
        }
        size_t i = 0;
        while (i < d && x[i] == hi[i]) x[i] = lo[i], ++i;
        if (i == d) break;
        ++x[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Triangulation of the cone into simplicial subcones spanned by its own rays.
inline std::vector<Mat> triangulate_on_rays(const RationalCone& c) {
    if (is_simplicial(c)) return {c.generators};
    // Non-simplicial pointed cones here are full 3-dimensional with >= 4
    // extreme rays. Fan out the cap of conv(0, rays) from its least vertex.
    Mat pts = c.generators;
    pts.push_back(zero_vec(c.dim_ambient));
    LatticePolytope q = hull_from_points(pts);
    Vec zero = zero_vec(c.dim_ambient);
    std::vector<Mat> pieces;
    for (const Facet& f : q.facets) {
        if (f.offset <= 0) continue;  // cap facets keep 0 strictly below
        std::vector<int> fv;
        for (size_t i = 0; i < q.vertices.size(); ++i)
            if (dot(f.normal, q.vertices[i]) == f.offset) fv.push_back(int(i));
        // Cyclic order around the facet via its edges.
        std::vector<std::pair<int, int>> fe;
        for (auto [a, b] : q.edges) {
            bool on_a = dot(f.normal, q.vertices[a]) == f.offset;
            bool on_b = dot(f.normal, q.vertices[b]) == f.offset;
            if (on_a && on_b) fe.push_back({a, b});
        }
        int start = fv[0];
        std::vector<int> ring = {start};
        int prev = -1;
        while (true) {
            int cur = ring.back(), next = -1;
            for (auto [a, b] : fe) {
                if (a == cur && b != prev) { next = b; break; }
                if (b == cur && a != prev) { next = a; break; }
            }
            if (next == start || next < 0) break;
            prev = cur;
            ring.push_back(next);
        }
        for (size_t i = 1; i + 1 < ring.size(); ++i)
            pieces.push_back({q.vertices[ring[0]], q.vertices[ring[i]], q.vertices[ring[i + 1]]});
    }
    return pieces;
}

inline bool cone_contains(const RationalCone& c, const Vec& x) {
    if (is_zero_vec(x)) return true;
    for (const Mat& piece : triangulate_on_rays(c)) {
        Mat cols = mat_transpose(piece);
        std::vector<Rat> rhs(x.size()), lam;
        for (size_t i = 0; i < x.size(); ++i) rhs[i] = Rat(x[i]);
        if (!solve_rational(cols, rhs, lam)) continue;
        bool in = true;
        for (const Rat& l : lam)
            if (l < 0) { in = false; break; }
        if (!in) continue;
        std::vector<Rat> check(x.size(), Rat(0));
        for (size_t j = 0; j < piece.size(); ++j)
            for (size_t i = 0; i < x.size(); ++i) check[i] += lam[j] * Rat(piece[j][i]);
        for (size_t i = 0; i < x.size() && in; ++i)
            if (check[i] != Rat(x[i])) in = false;
        if (in) return true;
    }
    return false;
}

inline Mat hilbert_basis(const RationalCone& c) {
    if (!is_pointed(c)) throw std::invalid_argument("not pointed");
    std::set<Vec> cand(c.generators.begin(), c.generators.end());
    for (const Mat& piece : triangulate_on_rays(c)) {
        if (piece.size() < size_t(c.dim_ambient)) {
            // Lower-dimensional simplicial cone: box points live in the
            // sublattice of its span; reduce and lift.
            Mat basis = span_lattice_basis(piece, c.dim_ambient);
            Mat bt = mat_transpose(basis);
            Mat red;
            for (const Vec& g : piece) {
                std::vector<Rat> rhs(g.size()), y;
                for (size_t i = 0; i < g.size(); ++i) rhs[i] = Rat(g[i]);
                solve_rational(bt, rhs, y);
                Vec q;
                for (const Rat& t : y) q.push_back(boost::multiprecision::numerator(t));
                red.push_back(q);
            }
            for (const Vec& b : box_points(RationalCone{int(red[0].size()), red})) {
                Vec lifted = zero_vec(c.dim_ambient);
                for (size_t i = 0; i < b.size(); ++i)
                    lifted = vec_add(lifted, vec_scale(b[i], basis[i]));
                if (!is_zero_vec(lifted)) cand.insert(lifted);
            }
            continue;
        }
        for (const Vec& b : box_points(RationalCone{c.dim_ambient, piece}))
            if (!is_zero_vec(b)) cand.insert(b);
    }
    Mat result;
    for (const Vec& x : cand) {
        bool reducible = false;
        for (const Vec& a : cand) {
            if (a == x) continue;
            Vec rest = vec_sub(x, a);
            if (is_zero_vec(rest)) continue;
            if (cone_contains(c, rest)) { reducible = true; break; }
        }
        if (!reducible) result.push_back(x);
    }
    std::sort(result.begin(), result.end());
    return result;
}

inline RationalCone tangent_cone(const LatticePolytope& p, const Vec& u) {
    return RationalCone{int(p.ambient_dim()), edge_directions_at(p, u)};
}

inline bool is_smooth(const LatticePolytope& p) {
    for (const Vec& u : p.vertices)
        if (!is_unimodular(tangent_cone(p, u))) return false;
    return true;
}

inline bool is_very_ample(const LatticePolytope& p) {
    for (const Vec& u : p.vertices)
        for (const Vec& h : hilbert_basis(tangent_cone(p, u)))
            if (!polytope_contains(p, vec_add(u, h))) return false;
    return true;
}

// Max over vertices of the normalized volume of conv(0, edge directions).
// Evaluated directly so that vertices whose tangent cone is not Q-Gorenstein
// (Bruns' example) still contribute their nib volume.
inline Int polytope_multiplicity(const LatticePolytope& p) {
    Int best = 0;
    for (const Vec& u : p.vertices) {
        RationalCone t = tangent_cone(p, u);
        Mat pts = t.generators;
        pts.push_back(zero_vec(t.dim_ambient));
        Int m = normalized_volume(hull_from_points(pts));
        if (m > best) best = m;
    }
    return best;
}

}  // namespace latpoly
