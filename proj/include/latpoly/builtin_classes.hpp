#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "core.hpp"
#include "fan.hpp"
#include "polytope.hpp"

namespace latpoly {

// Vertex lists of the 41 smooth polygons and 33 smooth 3-polytopes with at
// most 12 lattice points, one representative per equivalence class.
inline const std::vector<Mat>& builtin_class_vertices(int dim) {
    static const std::vector<Mat> polygons = {
        {{1, 0}, {0, 0}, {0, 1}, {1, 1}},
        {{0, 0}, {0, 1}, {2, 0}, {2, 1}},
        {{0, 0}, {0, 1}, {3, 0}, {3, 1}},
        {{0, 0}, {0, 1}, {4, 0}, {4, 1}},
        {{0, 0}, {0, 1}, {5, 0}, {5, 1}},
        {{2, 0}, {0, 0}, {0, 2}, {2, 2}},
        {{0, 2}, {0, 0}, {3, 0}, {3, 2}},
        {{1, 0}, {0, 0}, {0, 1}, {3, 1}},
        {{0, 0}, {0, 1}, {2, 0}, {4, 1}},
        {{0, 0}, {0, 1}, {3, 0}, {5, 1}},
        {{0, 0}, {0, 1}, {4, 0}, {6, 1}},
        {{0, 0}, {1, 0}, {5, 2}, {0, 2}},
        {{1, 0}, {0, 0}, {0, 1}, {4, 1}},
        {{0, 0}, {0, 1}, {2, 0}, {5, 1}},
        {{0, 0}, {0, 1}, {3, 0}, {6, 1}},
        {{1, 0}, {0, 0}, {0, 1}, {5, 1}},
        {{0, 0}, {0, 1}, {2, 0}, {6, 1}},
        {{0, 0}, {0, 1}, {3, 0}, {7, 1}},
        {{1, 0}, {0, 0}, {0, 1}, {6, 1}},
        {{0, 0}, {0, 1}, {2, 0}, {7, 1}},
        {{1, 0}, {0, 0}, {0, 1}, {7, 1}},
        {{0, 0}, {0, 1}, {2, 0}, {8, 1}},
        {{1, 0}, {0, 0}, {0, 1}, {8, 1}},
        {{1, 0}, {0, 0}, {0, 1}, {9, 1}},
        {{0, 1}, {1, 0}, {0, 0}},
        {{0, 0}, {2, 0}, {0, 2}},
        {{0, 0}, {3, 0}, {0, 3}},
        {{1, 0}, {0, 1}, {0, 2}, {2, 0}},
        {{2, 0}, {0, 2}, {0, 3}, {3, 0}},
        {{1, 0}, {0, 1}, {0, 3}, {3, 0}},
        {{1, 1}, {3, 0}, {0, 2}, {0, 4}, {4, 0}},
        {{4, 1}, {0, 3}, {0, 2}, {3, 0}, {1, 1}, {4, 0}, {1, 3}, {3, 2}},
        {{0, 3}, {0, 2}, {3, 0}, {1, 1}, {4, 0}, {1, 3}},
        {{2, 0}, {0, 1}, {1, 0}, {0, 3}, {2, 1}},
        {{2, 0}, {0, 1}, {1, 0}, {0, 4}, {2, 2}},
        {{0, 2}, {1, 0}, {0, 1}, {2, 0}, {2, 1}, {1, 2}},
        {{0, 3}, {2, 0}, {0, 2}, {3, 0}, {3, 1}, {1, 3}},
        {{0, 3}, {1, 0}, {0, 1}, {3, 0}, {3, 1}, {1, 3}},
        {{0, 0}, {1, 0}, {0, 4}, {1, 3}},
        {{2, 0}, {0, 0}, {0, 4}, {2, 2}},
        {{0, 0}, {1, 0}, {0, 5}, {1, 4}},
    };
    static const std::vector<Mat> polytopes = {
        {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {7, 0, 0}, {1, 1, 0}, {1, 0, 1}},
        {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {6, 0, 0}, {1, 1, 0}, {1, 0, 1}},
        {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {6, 0, 0}, {2, 1, 0}, {1, 0, 1}},
        {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {5, 0, 0}, {1, 1, 0}, {1, 0, 1}},
        {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {5, 0, 0}, {2, 1, 0}, {1, 0, 1}},
        {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {5, 0, 0}, {3, 1, 0}, {1, 0, 1}},
        {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {4, 0, 0}, {1, 1, 0}, {1, 0, 1}},
        {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {5, 0, 0}, {2, 1, 0}, {2, 0, 1}},
        {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {4, 0, 0}, {2, 1, 0}, {1, 0, 1}},
        {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {4, 0, 0}, {3, 1, 0}, {1, 0, 1}},
        {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {4, 0, 0}, {4, 1, 0}, {1, 0, 1}},
        {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {3, 0, 0}, {1, 1, 0}, {1, 0, 1}},
        {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {4, 0, 0}, {2, 1, 0}, {2, 0, 1}},
        {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {3, 0, 0}, {2, 1, 0}, {1, 0, 1}},
        {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {4, 0, 0}, {3, 1, 0}, {2, 0, 1}},
        {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {3, 0, 0}, {3, 1, 0}, {1, 0, 1}},
        {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0}, {2, 1, 0}, {1, 0, 1}},
        {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {3, 0, 0}, {3, 1, 0}, {2, 0, 1}},
        {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 0, 0}},
        {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}},
        {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}, {0, 2, 0}, {2, 0, 0}},
        {{2, 0, 0}, {0, 2, 0}, {2, 0, 1}, {0, 2, 1}, {0, 3, 0}, {3, 0, 0}},
        {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}},
        {{0, 0, 0}, {0, 0, 1}, {2, 0, 0}, {0, 2, 0}, {2, 0, 1}, {0, 2, 1}},
        {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 2}, {1, 0, 2}, {0, 1, 2}},
        {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 3}, {1, 0, 3}, {0, 1, 3}},
        {{0, 0, 0}, {0, 0, 1}, {2, 0, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}},
        {{0, 1, 0}, {0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {3, 0, 0}, {3, 1, 0}, {1, 0, 1}, {1, 1, 1}},
        {{0, 1, 0}, {0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {2, 0, 0}, {3, 1, 0}, {1, 0, 1}, {2, 1, 1}},
        {{0, 1, 0}, {0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {2, 0, 0}, {2, 1, 0}, {1, 0, 1}, {1, 1, 1}},
        {{0, 1, 0}, {0, 0, 0}, {0, 0, 1}, {0, 2, 1}, {2, 0, 0}, {2, 1, 0}, {1, 0, 1}, {1, 2, 1}},
        {{1, 1, 0}, {0, 1, 0}, {0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}},
        {{0, 1, 0}, {0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {2, 0, 0}, {2, 1, 0}, {2, 0, 1}, {2, 1, 1}},
    };
    if (dim == 2) return polygons;
    if (dim == 3) return polytopes;
    throw std::invalid_argument("dimension out of range");
}

inline std::vector<LatticePolytope> builtin_classes(int dim) {
    std::vector<LatticePolytope> out;
    for (const Mat& verts : builtin_class_vertices(dim)) out.push_back(hull_from_points(verts));
    return out;
}

// Normal fans of the builtin classes of the dimension, deduplicated; the
// natural seed set for the blow-up search.
inline std::vector<Fan> builtin_seed_fans(int dim) {
    std::vector<Fan> out;
    std::set<Fan> seen;
    for (const Mat& verts : builtin_class_vertices(dim)) {
        Fan f = normal_fan(hull_from_points(verts));
        if (seen.insert(f).second) out.push_back(f);
    }
    return out;
}

}  // namespace latpoly
