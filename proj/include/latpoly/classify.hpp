#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "core.hpp"
#include "equivalence.hpp"
#include "fan.hpp"
#include "polytope.hpp"

namespace latpoly {

// Wall between two adjacent maximal cones. The direction w is orthogonal to
// the shared rays with <ray(r2), w> = +1 and <ray(r1), w> = -1, so crossing
// from c1 to c2 moves the supported vertex by ell * w.
struct ChamberWall {
    int c1 = 0, c2 = 0;
    std::vector<int> shared;
    int r1 = 0, r2 = 0;
    Vec direction;
};

// Linear model of all polytopes sharing a fixed smooth complete normal fan,
// parametrized by the right-hand-side vector b of the facet inequalities
// <ray_i, x> <= b_i. Per maximal cone the supported vertex is
// x_cone(b) = vertex_solutions[cone] * b, and per wall the lattice length of
// the corresponding edge is edge_functionals[wall] . b.
struct ChamberModel {
    Fan fan;
    int base_cone = 0;
    std::vector<Mat> vertex_solutions;
    std::vector<ChamberWall> walls;
    Mat edge_functionals;
};

inline ChamberModel chamber_model(const Fan& f) {
    if (!fan_is_smooth(f)) throw std::invalid_argument("fan is not smooth");
    if (!fan_is_complete(f)) throw std::invalid_argument("fan is not complete");
    size_t d = size_t(f.dim), R = f.rays.size(), C = f.maximal_cones.size();

    ChamberModel m;
    m.fan = f;
    m.base_cone = 0;
    std::vector<Mat> inverses(C);
    for (size_t ci = 0; ci < C; ++ci) {
        Mat a;
        for (int r : f.maximal_cones[ci]) a.push_back(f.rays[r]);
        inverses[ci] = unimodular_inverse(a);
        Mat sol(d, zero_vec(R));
        for (size_t j = 0; j < d; ++j)
            for (size_t i = 0; i < d; ++i) sol[i][f.maximal_cones[ci][j]] = inverses[ci][i][j];
        m.vertex_solutions.push_back(std::move(sol));
    }

    for (size_t ci = 0; ci < C; ++ci)
        for (size_t cj = ci + 1; cj < C; ++cj) {
            std::vector<int> shared;
            std::set_intersection(f.maximal_cones[ci].begin(), f.maximal_cones[ci].end(),
                                  f.maximal_cones[cj].begin(), f.maximal_cones[cj].end(),
                                  std::back_inserter(shared));
            if (shared.size() != d - 1) continue;
            ChamberWall w;
            w.c1 = int(ci);
            w.c2 = int(cj);
            w.shared = shared;
            for (int r : f.maximal_cones[ci])
                if (!std::binary_search(shared.begin(), shared.end(), r)) w.r1 = r;
            size_t pos = 0;
            for (size_t j = 0; j < d; ++j)
                if (!std::binary_search(shared.begin(), shared.end(), f.maximal_cones[cj][j])) {
                    w.r2 = f.maximal_cones[cj][j];
                    pos = j;
                }
            w.direction = zero_vec(d);
            for (size_t i = 0; i < d; ++i) w.direction[i] = inverses[cj][i][pos];
            if (dot(f.rays[w.r1], w.direction) != -1)
                throw std::logic_error("wall direction failed");
            m.walls.push_back(std::move(w));
        }

    for (const ChamberWall& w : m.walls) {
        Vec row = zero_vec(R);
        row[w.r2] += 1;
        const Mat& sol = m.vertex_solutions[w.c1];
        for (size_t k = 0; k < R; ++k) {
            Int acc = 0;
            for (size_t i = 0; i < d; ++i) acc += f.rays[w.r2][i] * sol[i][k];
            row[k] -= acc;
        }
        m.edge_functionals.push_back(std::move(row));
    }
    return m;
}

namespace detail {

// Spanning tree of the wall graph, rooted at the base cone, BFS in cone
// order. Each entry: (child cone, parent cone, wall index).
struct ChamberTree {
    std::vector<std::array<int, 3>> order;
};

inline ChamberTree chamber_tree(const ChamberModel& m) {
    size_t C = m.fan.maximal_cones.size();
    std::vector<std::vector<std::pair<int, int>>> adj(C);  // (neighbor, wall)
    for (size_t wi = 0; wi < m.walls.size(); ++wi) {
        adj[m.walls[wi].c1].push_back({m.walls[wi].c2, int(wi)});
        adj[m.walls[wi].c2].push_back({m.walls[wi].c1, int(wi)});
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    ChamberTree t;
    std::vector<char> seen(C, 0);
    std::vector<int> queue = {m.base_cone};
    seen[m.base_cone] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int cur = queue[qi];
        for (auto [nb, wi] : adj[cur])
            if (!seen[nb]) {
                seen[nb] = 1;
                t.order.push_back({nb, cur, wi});
                queue.push_back(nb);
            }
    }
    if (t.order.size() + 1 != C) throw std::logic_error("wall graph disconnected");
    return t;
}

// Reconstruct b from per-cone vertices, then check that every vertex
// satisfies every inequality, strictly away from non-incident rays.
inline bool rhs_from_vertices(const ChamberModel& m, const Mat& x, Vec& b) {
    size_t R = m.fan.rays.size(), C = m.fan.maximal_cones.size();
    b.assign(R, 0);
    std::vector<char> have(R, 0);
    for (size_t ci = 0; ci < C; ++ci)
        for (int r : m.fan.maximal_cones[ci])
            if (!have[r]) {
                have[r] = 1;
                b[r] = dot(m.fan.rays[r], x[ci]);
            }
    for (size_t ci = 0; ci < C; ++ci) {
        const auto& cone = m.fan.maximal_cones[ci];
        for (size_t r = 0; r < R; ++r) {
            Int v = dot(m.fan.rays[r], x[ci]);
            bool member = std::binary_search(cone.begin(), cone.end(), int(r));
            if (member ? v != b[r] : v >= b[r]) return false;
        }
    }
    return true;
}

inline Int count_points_box(const std::vector<Facet>& facets, const Mat& verts, const Int& cap) {
    size_t d = verts[0].size();
    Vec lo = verts[0], hi = verts[0];
    for (const Vec& v : verts)
        for (size_t i = 0; i < d; ++i) {
            if (v[i] < lo[i]) lo[i] = v[i];
            if (v[i] > hi[i]) hi[i] = v[i];
        }
    Int count = 0;
    Vec x = lo;
    for (;;) {
        if (satisfies_all(facets, x)) {
            ++count;
            if (cap > 0 && count > cap) return count;
        }
        size_t i = 0;
        while (i < d && x[i] == hi[i]) x[i] = lo[i], ++i;
        if (i == d) break;
        ++x[i];
    }
    return count;
}

// Trusted constructor for a guard-checked chamber member: vertices, facets
// and edges come straight from the model, only lattice points are computed.
inline LatticePolytope polytope_from_rhs(const ChamberModel& m, const Vec& b) {
    size_t C = m.fan.maximal_cones.size();
    LatticePolytope p;
    p.dim = m.fan.dim;
    Mat verts(C);
    for (size_t ci = 0; ci < C; ++ci) verts[ci] = mat_apply(m.vertex_solutions[ci], b);
    std::vector<int> order(C), rank(C);
    for (size_t i = 0; i < C; ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int a, int c) { return verts[a] < verts[c]; });
    for (size_t i = 0; i < C; ++i) rank[order[i]] = int(i);
    for (int i : order) p.vertices.push_back(verts[i]);
    for (size_t r = 0; r < m.fan.rays.size(); ++r) p.facets.push_back({m.fan.rays[r], b[r]});
    for (const ChamberWall& w : m.walls) {
        int a = rank[w.c1], c = rank[w.c2];
        p.edges.push_back({std::min(a, c), std::max(a, c)});
    }
    std::sort(p.edges.begin(), p.edges.end());
    p.lattice_points = lattice_points_box_filter(p.facets, p.vertices);
    return p;
}

// Enumerate tree edge slacks, walking vertices incrementally. level < 0
// explores every total slack up to budget, otherwise exactly level.
inline void walk_chamber(const ChamberModel& m, const ChamberTree& t, long long budget,
                         long long level, unsigned long long& tested,
                         const std::function<void(const Mat&)>& emit) {
    size_t C = m.fan.maximal_cones.size();
    Mat x(C, zero_vec(m.fan.dim));
    std::function<void(size_t, long long)> rec = [&](size_t ti, long long left) {
        if (ti == t.order.size()) {
            if (level < 0 || left == 0) {
                ++tested;
                emit(x);
            }
            return;
        }
        auto [child, parent, wi] = t.order[ti];
        const ChamberWall& w = m.walls[wi];
        Vec dir = w.c1 == parent ? w.direction : vec_neg(w.direction);
        bool last = ti + 1 == t.order.size();
        for (long long e = 0; e <= left; ++e) {
            if (level >= 0 && last && e != left) continue;
            x[child] = vec_add(x[parent], vec_scale(Int(1 + e), dir));
            rec(ti + 1, left - e);
        }
    };
    rec(0, level < 0 ? budget : level);
}

}  // namespace detail

struct RhsEnumeration {
    Mat rhs_vectors;
    unsigned long long tested = 0;
};

// All right-hand sides b, pinned to 0 on the base cone, whose polytope has
// normal fan exactly m.fan and at most max_points lattice points.
inline RhsEnumeration enumerate_rhs(const ChamberModel& m, int max_points) {
    RhsEnumeration out;
    long long C = (long long)m.fan.maximal_cones.size();
    long long slack = max_points - C;
    if (slack < 0) return out;
    detail::ChamberTree t = detail::chamber_tree(m);
    Vec b;
    detail::walk_chamber(m, t, slack, -1, out.tested, [&](const Mat& x) {
        if (!detail::rhs_from_vertices(m, x, b)) return;
        std::vector<Facet> facets;
        for (size_t r = 0; r < m.fan.rays.size(); ++r) facets.push_back({m.fan.rays[r], b[r]});
        if (detail::count_points_box(facets, x, Int(max_points)) > max_points) return;
        out.rhs_vectors.push_back(b);
    });
    return out;
}

// Minimal lattice point count over all polytopes with normal fan exactly f.
inline Int min_lattice_points(const Fan& f) {
    ChamberModel m = chamber_model(f);
    detail::ChamberTree t = detail::chamber_tree(m);
    long long C = (long long)m.fan.maximal_cones.size();
    Int best = -1;
    unsigned long long tested = 0;
    Vec b;
    for (long long s = 0;; ++s) {
        if (best >= 0 && Int(C + s) >= best) return best;
        if (best < 0 && s > 64) throw std::domain_error("chamber is empty");
        detail::walk_chamber(m, t, s, s, tested, [&](const Mat& x) {
            if (!detail::rhs_from_vertices(m, x, b)) return;
            std::vector<Facet> facets;
            for (size_t r = 0; r < m.fan.rays.size(); ++r)
                facets.push_back({m.fan.rays[r], b[r]});
            Int n = detail::count_points_box(facets, x, Int(0));
            if (best < 0 || n < best) best = n;
        });
    }
}

// The projective plane fan plus the Hirzebruch fans H_a for 0 <= a <= max_a.
inline std::vector<Fan> minimal_smooth_2fans(int max_a) {
    std::vector<Fan> out;
    out.push_back(make_fan({{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {0, 2}, {1, 2}}));
    for (int a = 0; a <= max_a; ++a)
        out.push_back(
            make_fan({{1, 0}, {0, 1}, {-1, Int(a)}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    return out;
}

struct ClassifyStats {
    unsigned long long fans_explored = 0;
    unsigned long long rhs_tested = 0;
    unsigned long long polytopes_found = 0;
};

struct ClassifiedClass {
    LatticePolytope rep;
    CanonicalForm form;
    Fan source_fan;
};

struct ClassifyResult {
    std::vector<ClassifiedClass> classes;
    ClassifyStats stats;
    bool complete = true;
};

namespace detail {

inline int ray_cap(int dim, int max_points) {
    return dim == 2 ? max_points : (max_points + 4) / 2;
}

struct FanWork {
    std::vector<std::pair<Mat, LatticePolytope>> found;  // canonical key, representative
    std::vector<Fan> children;
    unsigned long long rhs_tested = 0;
    unsigned long long polytopes_found = 0;
};

inline FanWork process_fan(const Fan& f, int max_points) {
    FanWork work;
    ChamberModel m = chamber_model(f);
    RhsEnumeration en = enumerate_rhs(m, max_points);
    work.rhs_tested = en.tested;
    for (const Vec& b : en.rhs_vectors) {
        LatticePolytope p = polytope_from_rhs(m, b);
        ++work.polytopes_found;
        CanonicalForm cf = canonical_form_smooth(p);
        work.found.push_back({cf.vertex_list, hull_from_points(cf.vertex_list)});
    }
    std::set<std::vector<int>> faces;
    for (const auto& cone : f.maximal_cones) {
        for (size_t i = 0; i < cone.size(); ++i)
            for (size_t j = i + 1; j < cone.size(); ++j)
                faces.insert({cone[i], cone[j]});
        if (f.dim == 3) faces.insert(cone);
    }
    int cap = ray_cap(f.dim, max_points);
    for (const auto& face : faces) {
        Fan child = blow_up_fan(f, face);
        if (int(child.rays.size()) <= cap) work.children.push_back(child);
    }
    return work;
}

}  // namespace detail

// Breadth-first closure of the seed fans under blow-ups, enumerating every
// chamber along the way. budget = 0 is unlimited, otherwise at most that
// many fans are explored and the result is flagged incomplete when truncated.
inline ClassifyResult classify(int dim, int max_points, const std::vector<Fan>& seeds,
                               unsigned long long budget = 0, int jobs = 1) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("dimension out of range");
    if (jobs < 1) jobs = 1;
    int cap = detail::ray_cap(dim, max_points);

    ClassifyResult result;
    std::set<Fan> seen;
    std::vector<Fan> frontier;
    for (const Fan& s : seeds) {
        if (s.dim != dim || int(s.rays.size()) > cap) continue;
        if (seen.insert(s).second) frontier.push_back(s);
    }
    std::sort(frontier.begin(), frontier.end());

    std::map<Mat, ClassifiedClass> classes;
    bool truncated = false;
    while (!frontier.empty()) {
        if (budget > 0 && result.stats.fans_explored + frontier.size() > budget) {
            size_t keep = size_t(budget - result.stats.fans_explored);
            if (keep < frontier.size()) {
                frontier.resize(keep);
                truncated = true;
            }
            if (frontier.empty()) break;
        }
        std::vector<detail::FanWork> work(frontier.size());
        if (jobs == 1 || frontier.size() == 1) {
            for (size_t i = 0; i < frontier.size(); ++i)
                work[i] = detail::process_fan(frontier[i], max_points);
        } else {
            std::atomic<size_t> next{0};
            auto runner = [&]() {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= frontier.size()) return;
                    work[i] = detail::process_fan(frontier[i], max_points);
                }
            };
            std::vector<std::thread> pool;
            for (int j = 0; j < jobs; ++j) pool.emplace_back(runner);
            for (auto& th : pool) th.join();
        }

        std::vector<Fan> next_frontier;
        for (size_t i = 0; i < frontier.size(); ++i) {
            ++result.stats.fans_explored;
            result.stats.rhs_tested += work[i].rhs_tested;
            result.stats.polytopes_found += work[i].polytopes_found;
            for (auto& [key, rep] : work[i].found)
                if (!classes.count(key))
                    classes.emplace(key, ClassifiedClass{rep,
                                                         CanonicalForm{dim, key, "smooth-frame"},
                                                         frontier[i]});
            for (Fan& child : work[i].children)
                if (seen.insert(child).second) next_frontier.push_back(std::move(child));
        }
        std::sort(next_frontier.begin(), next_frontier.end());
        frontier = std::move(next_frontier);
    }

    for (auto& [key, cls] : classes) result.classes.push_back(std::move(cls));
    std::sort(result.classes.begin(), result.classes.end(),
              [](const ClassifiedClass& a, const ClassifiedClass& b) {
                  if (a.rep.lattice_points.size() != b.rep.lattice_points.size())
                      return a.rep.lattice_points.size() < b.rep.lattice_points.size();
                  if (a.rep.vertices.size() != b.rep.vertices.size())
                      return a.rep.vertices.size() < b.rep.vertices.size();
                  return a.form.vertex_list < b.form.vertex_list;
              });
    result.complete = !truncated;
    return result;
}

}  // namespace latpoly
