#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "core.hpp"
#include "polytope.hpp"

namespace latpoly {

namespace detail {

inline bool next_combination(std::vector<size_t>& c, size_t n) {
    size_t k = c.size();
    for (size_t i = k; i-- > 0;) {
        if (c[i] != n - k + i) {
            ++c[i];
            for (size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Exact membership in conv(pts): by Caratheodory some subset of size at most
// d+1 supports a nonnegative affine combination equal to x.
inline bool in_convex_hull(const Vec& x, const Mat& pts) {
    size_t n = pts.size();
    if (n == 0) return false;
    if (n == 1) return pts[0] == x;
    size_t d = x.size();
    size_t maxk = std::min(n, d + 1);
    for (size_t k = 1; k <= maxk; ++k) {
        std::vector<size_t> idx(k);
        for (size_t i = 0; i < k; ++i) idx[i] = i;
        do {
            Mat a(d + 1, Vec(k));
            std::vector<Rat> rhs(d + 1), lam;
            for (size_t r = 0; r < d; ++r) {
                for (size_t j = 0; j < k; ++j) a[r][j] = pts[idx[j]][r];
                rhs[r] = Rat(x[r]);
            }
            for (size_t j = 0; j < k; ++j) a[d][j] = 1;
            rhs[d] = Rat(1);
            if (solve_rational(a, rhs, lam)) {
                bool ok = true;
                for (const Rat& l : lam)
                    if (l < 0) { ok = false; break; }
                if (ok) return true;
            }
        } while (next_combination(idx, n));
    }
    return false;
}

inline Mat hull_vertices_of(const Mat& pts) {
    Mat out;
    for (size_t i = 0; i < pts.size(); ++i) {
        Mat rest;
        for (size_t j = 0; j < pts.size(); ++j)
            if (j != i) rest.push_back(pts[j]);
        if (!in_convex_hull(pts[i], rest)) out.push_back(pts[i]);
    }
    return out;
}

inline int affine_dim_of(const Mat& pts) {
    if (pts.size() <= 1) return 0;
    Mat diffs;
    for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(vec_sub(pts[i], pts[0]));
    return int(mat_rank(diffs));
}

// Facets of conv(cell) as point sublists, for cells of affine dim 1..3.
inline std::vector<Mat> facets_of_cell(const Mat& cell) {
    int k = affine_dim_of(cell);
    size_t amb = cell[0].size();
    std::vector<Mat> out;
    std::set<Mat> seen;
    auto push = [&](Mat f) {
        std::sort(f.begin(), f.end());
        if (seen.insert(f).second) out.push_back(std::move(f));
    };
    if (k == 1) {
        for (const Vec& v : hull_vertices_of(cell)) push({v});
        return out;
    }
    Mat vs = hull_vertices_of(cell);
    auto supported = [&](const Vec& nrm, const Vec& base) {
        int side = 0;
        for (const Vec& p : cell) {
            int s = int_sign(dot(nrm, vec_sub(p, base)));
            if (s == 0) continue;
            if (side == 0) side = s;
            else if (s != side) return false;
        }
        return true;
    };
    auto on_line = [&](const Vec& nrm, const Vec& base) {
        Mat f;
        for (const Vec& p : cell)
            if (dot(nrm, vec_sub(p, base)) == 0) f.push_back(p);
        return f;
    };
    if (k == 2 && amb == 2) {
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) {
                Vec d = vec_sub(vs[j], vs[i]);
                Vec nrm = {d[1], -d[0]};
                if (supported(nrm, vs[i])) push(on_line(nrm, vs[i]));
            }
        return out;
    }
    if (k == 2 && amb == 3) {
        Vec plane;
        bool have = false;
        for (size_t i = 1; i < vs.size() && !have; ++i)
            for (size_t j = i + 1; j < vs.size() && !have; ++j) {
                Vec n = cross3(vec_sub(vs[i], vs[0]), vec_sub(vs[j], vs[0]));
                if (!is_zero_vec(n)) { plane = n; have = true; }
            }
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) {
                Vec nrm = cross3(vec_sub(vs[j], vs[i]), plane);
                if (supported(nrm, vs[i])) push(on_line(nrm, vs[i]));
            }
        return out;
    }
    if (k == 3) {
        std::set<std::pair<Vec, Int>> planes;
        for (size_t i = 0; i < cell.size(); ++i)
            for (size_t j = i + 1; j < cell.size(); ++j)
                for (size_t l = j + 1; l < cell.size(); ++l) {
                    Vec n = cross3(vec_sub(cell[j], cell[i]), vec_sub(cell[l], cell[i]));
                    if (is_zero_vec(n)) continue;
                    n = primitive_vector(n);
                    Int off = dot(n, cell[i]);
                    int side = 0;
                    bool flat = true;
                    for (const Vec& p : cell) {
                        int s = int_sign(dot(n, p) - off);
                        if (s == 0) continue;
                        if (side == 0) side = s;
                        else if (s != side) { flat = false; break; }
                    }
                    if (!flat) continue;
                    if (side > 0) { n = vec_neg(n); off = -off; }
                    if (!planes.insert({n, off}).second) continue;
                    Mat f;
                    for (const Vec& p : cell)
                        if (dot(n, p) == off) f.push_back(p);
                    push(std::move(f));
                }
        return out;
    }
    throw std::logic_error("cell dimension out of range");
}

inline bool is_simplex_cell(const Mat& cell, int dim) {
    return cell.size() == size_t(dim) + 1 && affine_dim_of(cell) == dim;
}

// Refine one cell by pulling at x: cells not containing x survive, others
// are replaced by cones with apex x over the facets that avoid x.
inline std::vector<Mat> pull_cell(const Mat& cell, const Vec& x, int dim) {
    if (!in_convex_hull(x, cell)) return {cell};
    if (is_simplex_cell(cell, dim) && std::find(cell.begin(), cell.end(), x) != cell.end())
        return {cell};
    std::vector<Mat> out;
    for (const Mat& g : facets_of_cell(cell)) {
        if (in_convex_hull(x, g)) continue;
        for (Mat piece : pull_cell(g, x, dim - 1)) {
            piece.push_back(x);
            std::sort(piece.begin(), piece.end());
            out.push_back(std::move(piece));
        }
    }
    return out;
}

}  // namespace detail

// Pulling triangulation of p along the given insertion order, which must be
// a permutation of the lattice points. Every simplex is returned as a sorted
// vertex list; the list itself is sorted.
inline std::vector<Mat> pulling_triangulation(const LatticePolytope& p, const Mat& order) {
    Mat check = order;
    std::sort(check.begin(), check.end());
    if (check != p.lattice_points)
        throw std::invalid_argument("order is not a permutation of the lattice points");
    std::vector<Mat> cells = {p.vertices};
    for (const Vec& x : order) {
        std::vector<Mat> next;
        for (const Mat& c : cells)
            for (Mat& piece : detail::pull_cell(c, x, p.dim)) next.push_back(std::move(piece));
        cells = std::move(next);
    }
    for (const Mat& c : cells)
        if (!detail::is_simplex_cell(c, p.dim)) throw std::logic_error("pulling left a non-simplex");
    std::sort(cells.begin(), cells.end());
    return cells;
}

inline bool is_unimodular_triangulation(const std::vector<Mat>& simplices) {
    for (const Mat& s : simplices) {
        size_t d = s[0].size();
        if (s.size() != d + 1) return false;
        Mat m;
        for (size_t i = 1; i < s.size(); ++i) m.push_back(vec_sub(s[i], s[0]));
        if (int_abs(det(m)) != 1) return false;
    }
    return true;
}

// A triangulation is flag when every clique of its edge graph spans a face.
inline bool is_flag(const std::vector<Mat>& simplices, int dim) {
    Mat verts;
    std::set<Vec> vset;
    for (const Mat& s : simplices)
        for (const Vec& v : s)
            if (vset.insert(v).second) verts.push_back(v);
    std::sort(verts.begin(), verts.end());
    auto index_of = [&](const Vec& v) {
        return int(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    std::set<std::vector<int>> faces;
    std::set<std::pair<int, int>> edges;
    for (const Mat& s : simplices) {
        std::vector<int> si;
        for (const Vec& v : s) si.push_back(index_of(v));
        std::sort(si.begin(), si.end());
        for (size_t mask = 1; mask < (size_t(1) << si.size()); ++mask) {
            std::vector<int> f;
            for (size_t i = 0; i < si.size(); ++i)
                if (mask & (size_t(1) << i)) f.push_back(si[i]);
            faces.insert(f);
        }
        for (size_t i = 0; i < si.size(); ++i)
            for (size_t j = i + 1; j < si.size(); ++j) edges.insert({si[i], si[j]});
    }
    size_t n = verts.size();
    for (int k = 3; k <= dim + 2; ++k) {
        if (size_t(k) > n) break;
        std::vector<size_t> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = size_t(i);
        do {
            bool clique = true;
            for (size_t i = 0; i < idx.size() && clique; ++i)
                for (size_t j = i + 1; j < idx.size() && clique; ++j)
                    if (!edges.count({int(idx[i]), int(idx[j])})) clique = false;
            if (!clique) continue;
            if (k > dim + 1) return false;
            std::vector<int> f(idx.begin(), idx.end());
            if (!faces.count(f)) return false;
        } while (detail::next_combination(idx, n));
    }
    return true;
}

struct TriangulationCertificate {
    Mat order;
    std::vector<Mat> simplices;
    unsigned long long attempt = 0;
};

// Search for a flag unimodular pulling triangulation: the lexicographic
// order first, then seeded shuffles, at most `budget` attempts in total.
inline std::optional<TriangulationCertificate> find_flag_unimodular_regular(
    const LatticePolytope& p, unsigned long long budget, unsigned long long seed = 12345) {
    std::mt19937_64 eng(seed);
    for (unsigned long long attempt = 0; attempt < budget; ++attempt) {
        Mat order = p.lattice_points;
        if (attempt > 0)
            for (size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[size_t(eng() % i)]);
        std::vector<Mat> tri = pulling_triangulation(p, order);
        if (is_unimodular_triangulation(tri) && is_flag(tri, p.dim))
            return TriangulationCertificate{std::move(order), std::move(tri), attempt};
    }
    return std::nullopt;
}

}  // namespace latpoly
