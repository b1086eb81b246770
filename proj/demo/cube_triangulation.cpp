// Finds a flag unimodular regular triangulation of the unit cube and prints
// the point order certificate together with the resulting simplices.

#include <latpoly/latpoly.hpp>

#include <iostream>

int main() {
    using namespace latpoly;

    Mat corners;
    for (int x = 0; x <= 1; ++x)
        for (int y = 0; y <= 1; ++y)
            for (int z = 0; z <= 1; ++z) corners.push_back({Int(x), Int(y), Int(z)});
    LatticePolytope cube = hull_from_points(corners);

    auto cert = find_flag_unimodular_regular(cube, 1000);
    if (!cert) {
        std::cerr << "no certificate within budget\n";
        return 2;
    }

    std::cout << "found on attempt " << cert->attempt << "\n";
    std::cout << "pulling order:";
    for (const auto& p : cert->order)
        std::cout << " (" << p[0].str() << "," << p[1].str() << "," << p[2].str()
                  << ")";
    std::cout << "\n" << cert->simplices.size() << " simplices:\n";
    for (const auto& s : cert->simplices) {
        for (const auto& p : s)
            std::cout << " (" << p[0].str() << "," << p[1].str() << ","
                      << p[2].str() << ")";
        std::cout << "\n";
    }

    auto tri = pulling_triangulation(cube, cert->order);
    std::cout << "replay matches: "
              << (tri == cert->simplices ? "yes" : "no") << "\n";
    return 0;
}
