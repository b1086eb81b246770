// Enumerates smooth polygon classes with at most N lattice points and prints
// a census table grouped by vertex count.

#include <latpoly/latpoly.hpp>

#include <cstdlib>
#include <iostream>
#include <map>

int main(int argc, char** argv) {
    using namespace latpoly;

    int max_points = argc > 1 ? std::atoi(argv[1]) : 12;
    if (max_points < 3) {
        std::cerr << "usage: polygon_census [max_points >= 3]\n";
        return 1;
    }

    auto seeds = minimal_smooth_2fans(max_points - 3);
    ClassifyResult res = classify(2, max_points, seeds);

    std::map<int, int> by_vertices;
    for (const auto& cls : res.classes)
        ++by_vertices[static_cast<int>(cls.rep.vertices.size())];

    std::cout << "smooth polygons with at most " << max_points
              << " lattice points: " << res.classes.size() << " classes\n";
    for (const auto& [v, n] : by_vertices)
        std::cout << "  " << v << " vertices: " << n << "\n";
    std::cout << "fans explored: " << res.stats.fans_explored
              << ", right-hand sides tested: " << res.stats.rhs_tested << "\n";

    for (const auto& cls : res.classes) {
        std::cout << canonical_id(cls.form) << " ";
        for (const auto& v : cls.rep.vertices)
            std::cout << "(" << v[0].str() << "," << v[1].str() << ")";
        std::cout << "\n";
    }
    return 0;
}
