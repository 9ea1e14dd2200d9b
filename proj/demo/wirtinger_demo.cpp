// Computes the Wirtinger number of a few table diagrams and of a connected
// sum, printing the coloring certificate for each.

#include <iostream>

#include "bridgekit/bridgekit.hpp"

int main() {
    using namespace bridgekit;

    const Diagram trefoil = parse_gauss("O1+U2+O3+U1+O2+U3+", "3_1");
    const Diagram figure_eight = parse_gauss("U1O2U3O1U4O3U2O4", "4_1");
    const Diagram sum = connected_sum(trefoil, figure_eight);

    for (const Diagram& d : {trefoil, figure_eight, sum}) {
        const SearchOutcome out = wirtinger_number(d);
        std::cout << d.name() << ": " << serialize(d) << "\n  omega = " << out.k << ", seeds =";
        for (StrandId s : out.certificate->seeds) std::cout << ' ' << s;
        std::cout << ", " << out.certificate->trace.size() << " moves\n";
        for (const MoveRecord& m : out.certificate->trace) {
            std::cout << "    crossing " << m.crossing << ": strand " << m.source << " -> " << m.target
                      << " under " << m.over << " (color " << m.color << ")\n";
        }
    }
}
