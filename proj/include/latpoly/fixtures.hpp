#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "core.hpp"
#include "polytope.hpp"

namespace latpoly {

// Simplex with normalized volume k and no interior or facet-interior points.
inline LatticePolytope reeve_simplex(const Int& k) {
    if (k < 1) throw std::invalid_argument("parameter must be positive");
    return hull_from_points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, k}});
}

// Very ample but not normal for k >= 1; the interesting vertex is (0,1,0).
inline LatticePolytope bruns_polytope(const Int& k) {
    if (k < 1) throw std::invalid_argument("parameter must be positive");
    return hull_from_points({{0, 0, 0},
                             {1, 0, 0},
                             {0, 1, 0},
                             {0, 0, 1},
                             {1, 0, 1},
                             {0, 1, 1},
                             {1, 1, k},
                             {1, 1, k + 1}});
}

struct MarkedPolytope {
    LatticePolytope polytope;
    Mat marked_points;
};

// Trapezoid conv((0,0),(a+1,0),(0,1),(1,1)) with its six marked lattice
// points (fewer when a <= 1 makes them collide).
inline MarkedPolytope hirzebruch_trapezoid(const Int& a) {
    if (a < 0) throw std::invalid_argument("parameter must be nonnegative");
    MarkedPolytope out;
    out.polytope = hull_from_points({{0, 0}, {a + 1, 0}, {0, 1}, {1, 1}});
    Mat marked = {{0, 0}, {1, 0}, {a, 0}, {a + 1, 0}, {0, 1}, {1, 1}};
    std::sort(marked.begin(), marked.end());
    marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
    out.marked_points = marked;
    return out;
}

inline Int fibonacci_number(int n) {
    Int a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        Int c = a + b;
        a = b;
        b = c;
    }
    return a;
}

// The 2k+1 edge directions (F_2i, F_2i-2) for i = 1..k, then
// (F_2j+1, F_2j-1) for j = k-1 down to 1, then (1,1) and (0,1). Consecutive
// determinants are all +1.
inline Mat fibonacci_chain(int k) {
    if (k < 1) throw std::invalid_argument("parameter must be positive");
    Mat chain;
    for (int i = 1; i <= k; ++i)
        chain.push_back({fibonacci_number(2 * i), fibonacci_number(2 * i - 2)});
    for (int j = k - 1; j >= 1; --j)
        chain.push_back({fibonacci_number(2 * j + 1), fibonacci_number(2 * j - 1)});
    chain.push_back({1, 1});
    chain.push_back({0, 1});
    return chain;
}

// Closed convex lattice walk built from four rotated copies of the chain:
// 8k+4 unit steps, visiting 8k+4 boundary points, translated into the
// nonnegative orthant. Counter-clockwise, starting at the leftmost seam.
inline Mat fibonacci_boundary_walk(int k) {
    Mat chain = fibonacci_chain(k);
    Mat steps;
    for (size_t i = chain.size(); i-- > 0;) steps.push_back({chain[i][0], -chain[i][1]});
    for (const Vec& c : chain) steps.push_back(c);
    for (size_t i = chain.size(); i-- > 0;) steps.push_back({-chain[i][0], chain[i][1]});
    for (const Vec& c : chain) steps.push_back({-c[0], -c[1]});

    Mat pts;
    Vec x = {0, 0};
    for (const Vec& s : steps) {
        pts.push_back(x);
        x = vec_add(x, s);
    }
    if (!is_zero_vec(x)) throw std::logic_error("walk failed to close");

    Vec lo = pts[0];
    for (const Vec& p : pts) {
        if (p[0] < lo[0]) lo[0] = p[0];
        if (p[1] < lo[1]) lo[1] = p[1];
    }
    for (Vec& p : pts) p = vec_sub(p, lo);
    return pts;
}

inline LatticePolytope fibonacci_polygon(int k) {
    return hull_from_points(fibonacci_boundary_walk(k));
}

}  // namespace latpoly
