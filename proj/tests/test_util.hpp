#pragma once

#include <latpoly/latpoly.hpp>

#include <initializer_list>
#include <set>
#include <utility>

namespace testutil {

using namespace latpoly;

inline Mat pts2(std::initializer_list<std::pair<int, int>> l) {
    Mat m;
    for (auto [x, y] : l) m.push_back({Int(x), Int(y)});
    return m;
}

inline Mat pts3(std::initializer_list<std::array<int, 3>> l) {
    Mat m;
    for (auto [x, y, z] : l) m.push_back({Int(x), Int(y), Int(z)});
    return m;
}

// Brute-force irreducible elements of the semigroup of cone points.
//
// Candidates are the nonzero lattice points of the dim-fold dilation of
// conv(0, rays). They contain the Hilbert basis: a point with height above
// dim has some barycentric coordinate >= 1 and splits off a generator. The
// candidate set is also closed under decomposition (heights are nonnegative
// and add up), so reducibility within the set equals reducibility in the
// semigroup and the scan below is exact.
inline Mat oracle_hilbert_basis(const RationalCone& c) {
    LatticePolytope dn = dilate(nib(c), Int(c.dim_ambient));
    std::set<Vec> pts;
    for (const Vec& p : dn.lattice_points)
        if (!is_zero_vec(p) && cone_contains(c, p)) pts.insert(p);
    Mat basis;
    for (const Vec& x : pts) {
        bool reducible = false;
        for (const Vec& y : pts) {
            if (y == x) continue;
            Vec z = vec_sub(x, y);
            if (pts.count(z)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(x);
    }
    return basis;
}

}  // namespace testutil
