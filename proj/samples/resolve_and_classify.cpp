// Resolves a few germs, prints their chains, and classifies the branched covers.
#include "germlab/germlab.hpp"

#include <iostream>

int main()
{
    using namespace germlab;
    for (auto [k1, k2] : {std::pair<Int, Int>{5, 3}, {6, 5}, {9, 2}, {3, 2}}) {
        Resolution r = resolve(k1, k2);
        std::cout << "x^" << k1 << " - y^" << k2 << ": chain " << r.graph.chain.full().str() << ", center at "
                  << r.graph.branchAt << ", path " << path_to_root(Orbit(k1, k2)).str() << "\n";
        GermClass g = classify(k1, k2);
        std::cout << "  family " << family_name(g.family);
        if (g.witness)
            std::cout << " at degree " << g.degree << ", a = " << g.witness->a.cycle_notation()
                      << ", b = " << g.witness->b.cycle_notation();
        std::cout << "\n";
    }
}
