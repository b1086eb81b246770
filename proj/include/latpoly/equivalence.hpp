#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cone.hpp"
#include "core.hpp"
#include "polytope.hpp"

namespace latpoly {

struct CanonicalForm {
    int dim = 0;
    Mat vertex_list;  // transformed vertices, lexicographically sorted
    std::string frame_note;
};

inline bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.dim == b.dim && a.vertex_list == b.vertex_list;
}

inline bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_list < b.vertex_list;
}

namespace detail {

// Rewrite a lower-dimensional polytope in coordinates of its span lattice.
inline LatticePolytope full_dim_copy(const LatticePolytope& p) {
    if (p.dim == int(p.ambient_dim())) return p;
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
    return hull_from_points(reduced);
}

inline std::vector<Int> edge_length_multiset(const LatticePolytope& p) {
    std::vector<Int> lens;
    for (auto [a, b] : p.edges) lens.push_back(segment_lattice_length(p.vertices[a], p.vertices[b]));
    std::sort(lens.begin(), lens.end());
    return lens;
}

}  // namespace detail

// Canonical form under integral-affine equivalence for smooth polytopes:
// minimize the sorted vertex list over all frames (u, ordering of the d
// primitive edge directions at u), each frame mapped to the standard basis.
inline CanonicalForm canonical_form_smooth(const LatticePolytope& p) {
    LatticePolytope q = detail::full_dim_copy(p);
    size_t d = size_t(q.dim);
    if (!is_smooth(q)) throw std::invalid_argument("use general matcher");
    Mat best;
    bool have = false;
    for (const Vec& u : q.vertices) {
        Mat dirs = edge_directions_at(q, u);
        if (dirs.size() != d) throw std::invalid_argument("use general matcher");
        std::sort(dirs.begin(), dirs.end());
        do {
            Mat m = mat_transpose(unimodular_inverse(dirs));
            Mat mapped;
            for (const Vec& x : q.vertices) mapped.push_back(mat_apply(m, vec_sub(x, u)));
            std::sort(mapped.begin(), mapped.end());
            if (!have || mapped < best) {
                best = std::move(mapped);
                have = true;
            }
        } while (std::next_permutation(dirs.begin(), dirs.end()));
    }
    return CanonicalForm{int(d), best, "smooth-frame"};
}

namespace detail {

// Exhaustive matcher: look for an affine unimodular map sending the vertex
// set of p onto the vertex set of q, anchored at vertex frames.
inline bool frame_match(const LatticePolytope& p, const LatticePolytope& q) {
    size_t d = size_t(p.dim);
    size_t n = p.vertices.size();
    const Vec& u0 = p.vertices[0];
    // First d linearly independent vertex differences from u0.
    std::vector<size_t> frame;
    Mat fdiffs;
    for (size_t i = 1; i < n && frame.size() < d; ++i) {
        Mat trial = fdiffs;
        trial.push_back(vec_sub(p.vertices[i], u0));
        if (mat_rank(trial) == trial.size()) {
            frame.push_back(i);
            fdiffs = std::move(trial);
        }
    }
    if (frame.size() != d) return false;

    std::set<Vec> qset(q.vertices.begin(), q.vertices.end());
    // Odometer over ordered d-tuples of target vertices.
    size_t m = q.vertices.size();
    std::vector<size_t> state(d, 0);
    for (size_t w0 = 0; w0 < m; ++w0) {
        const Vec& t0 = q.vertices[w0];
        std::fill(state.begin(), state.end(), 0);
        for (;;) {
            bool distinct = true;
            for (size_t i = 0; i < d && distinct; ++i) {
                if (state[i] == w0) distinct = false;
                for (size_t j = i + 1; j < d && distinct; ++j)
                    if (state[i] == state[j]) distinct = false;
            }
            if (distinct) {
                // Row r of M solves <fdiffs_k, row> = q[state_k][r] - t0[r].
                Mat mrows;
                bool ok = true;
                for (size_t r = 0; r < d && ok; ++r) {
                    std::vector<Rat> rhs(d), row;
                    for (size_t k = 0; k < d; ++k)
                        rhs[k] = Rat(q.vertices[state[k]][r] - t0[r]);
                    if (!solve_rational(fdiffs, rhs, row)) { ok = false; break; }
                    Vec irow;
                    for (const Rat& c : row) {
                        if (boost::multiprecision::denominator(c) != 1) { ok = false; break; }
                        irow.push_back(boost::multiprecision::numerator(c));
                    }
                    if (!ok) break;
                    mrows.push_back(irow);
                }
                if (ok && int_abs(det(mrows)) == 1) {
                    bool match = true;
                    for (const Vec& x : p.vertices) {
                        Vec y = vec_add(mat_apply(mrows, vec_sub(x, u0)), t0);
                        if (!qset.count(y)) { match = false; break; }
                    }
                    if (match) return true;
                }
            }
            size_t i = 0;
            while (i < d && state[i] + 1 == m) state[i] = 0, ++i;
            if (i == d) break;
            ++state[i];
        }
    }
    return false;
}

}  // namespace detail

inline bool are_equivalent(const LatticePolytope& a, const LatticePolytope& b) {
    if (a.dim != b.dim) return false;
    LatticePolytope p = detail::full_dim_copy(a);
    LatticePolytope q = detail::full_dim_copy(b);
    if (p.vertices.size() != q.vertices.size()) return false;
    if (p.lattice_points.size() != q.lattice_points.size()) return false;
    if (normalized_volume(p) != normalized_volume(q)) return false;
    if (detail::edge_length_multiset(p) != detail::edge_length_multiset(q)) return false;
    bool ps = is_smooth(p), qs = is_smooth(q);
    if (ps != qs) return false;
    if (ps) return canonical_form_smooth(p) == canonical_form_smooth(q);
    return detail::frame_match(p, q);
}

// One representative per equivalence class. Smooth classes are keyed by
// canonical form and represented by its vertex list; the rest fall back to
// pairwise matching and keep their first-seen member.
inline std::vector<LatticePolytope> dedup_classes(const std::vector<LatticePolytope>& input) {
    std::map<Mat, LatticePolytope> smooth_reps;
    std::vector<LatticePolytope> general_reps;
    for (const LatticePolytope& p : input) {
        LatticePolytope f = detail::full_dim_copy(p);
        if (is_smooth(f)) {
            CanonicalForm cf = canonical_form_smooth(f);
            if (!smooth_reps.count(cf.vertex_list))
                smooth_reps.emplace(cf.vertex_list, hull_from_points(cf.vertex_list));
        } else {
            bool known = false;
            for (const LatticePolytope& r : general_reps)
                if (are_equivalent(r, f)) { known = true; break; }
            if (!known) general_reps.push_back(f);
        }
    }
    std::vector<LatticePolytope> out;
    for (auto& [key, rep] : smooth_reps) out.push_back(rep);
    for (auto& rep : general_reps) out.push_back(rep);
    std::sort(out.begin(), out.end(), [](const LatticePolytope& x, const LatticePolytope& y) {
        if (x.lattice_points.size() != y.lattice_points.size())
            return x.lattice_points.size() < y.lattice_points.size();
        if (x.vertices.size() != y.vertices.size()) return x.vertices.size() < y.vertices.size();
        return x.vertices < y.vertices;
    });
    return out;
}

}  // namespace latpoly
