// Walks the Fibonacci polygon family: prints the chain of lattice vectors,
// the determinant pattern of consecutive pairs, and the polygon invariants.

#include <latpoly/latpoly.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    using namespace latpoly;

    int k = argc > 1 ? std::atoi(argv[1]) : 3;
    if (k < 1) {
        std::cerr << "usage: fibonacci_tour [k >= 1]\n";
        return 1;
    }

    Mat chain = fibonacci_chain(k);
    std::cout << "chain for k=" << k << ":";
    for (const auto& v : chain)
        std::cout << " (" << v[0].str() << "," << v[1].str() << ")";
    std::cout << "\n";
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        Int d = chain[i][0] * chain[i + 1][1] - chain[i][1] * chain[i + 1][0];
        std::cout << "det(v" << i << ",v" << (i + 1) << ") = " << d.str() << "\n";
    }

    Mat walk = fibonacci_boundary_walk(k);
    LatticePolytope p = fibonacci_polygon(k);
    std::cout << "boundary walk points: " << walk.size() << "\n";
    std::cout << "hull vertices: " << p.vertices.size() << "\n";
    std::cout << "lattice points: " << p.lattice_points.size() << "\n";
    std::cout << "smooth: " << (is_smooth(p) ? "yes" : "no") << "\n";
    std::cout << "normalized volume: " << normalized_volume(p).str() << "\n";
    return 0;
}
