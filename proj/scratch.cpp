// Development scratch: checks core numbers and searches for a minimal
// +/-1 fundamental cycle generating H^Q_3(R_3). Not part of the build.
#include <iostream>
#include <vector>

#include "qlab/boundary.hpp"
#include "qlab/chain.hpp"
#include "qlab/cocycles.hpp"
#include "qlab/homology.hpp"
#include "qlab/quandle.hpp"

using namespace qlab;

int main() {
    const FiniteQuandle r3 = dihedral(3);

    const auto basis3 = tuple_basis(3, 3, Theory::quandle);
    std::cout << "nondegenerate triples over R_3: " << basis3.size() << "\n";
    const auto basis4 = tuple_basis(3, 4, Theory::quandle);
    std::cout << "nondegenerate 4-tuples over R_3: " << basis4.size() << "\n";

    std::cout << "H^Q_2(R_3) = " << homology(r3, 2, Theory::quandle).to_string() << "\n";
    std::cout << "H^Q_3(R_3) = " << homology(r3, 3, Theory::quandle).to_string() << "\n";

    const auto sol = solve_cocycles(r3, 3, 3);
    std::cout << "dim Z^3 = " << sol.cocycle_basis.size() << ", dim B^3 = "
              << sol.coboundary_basis.size() << ", dim H^3 = " << sol.h_dim << "\n";

    const Cochain theta = select_distinguished_cocycle(3);
    std::cout << "theta tuples:\n";
    for (const auto& [t, v] : theta.values) {
        for (int e : t) std::cout << e << " ";
        std::cout << "-> " << v << "\n";
    }
    std::cout << "theta is cocycle: " << is_cocycle(theta, r3)
              << ", is coboundary: " << is_coboundary(theta, r3) << "\n";

    // search +/-1 cycles with small support and nonzero pairing with theta
    const int nb = static_cast<int>(basis3.size());
    for (int support = 2; support <= 6; ++support) {
        std::vector<int> idx(support);
        // combinations of `support` distinct basis triples
        std::vector<int> c(support);
        for (int i = 0; i < support; ++i) c[i] = i;
        bool found = false;
        while (true) {
            // sign patterns; fix first sign = +1 (cycle negation symmetric)
            for (int mask = 0; mask < (1 << (support - 1)) && !found; ++mask) {
                IntChain z = IntChain::zero(3);
                for (int i = 0; i < support; ++i) {
                    const int sign = (i == 0) ? 1 : ((mask >> (i - 1)) & 1 ? -1 : 1);
                    z.add(basis3[static_cast<std::size_t>(c[i])], sign);
                }
                if (!boundary(z, r3, Theory::quandle).is_zero()) continue;
                const int w = kronecker(z, theta);
                if (w == 0) continue;
                std::cout << "support " << support << " cycle found, pairing " << w << ":\n";
                for (int i = 0; i < support; ++i) {
                    const int sign = (i == 0) ? 1 : ((mask >> (i - 1)) & 1 ? -1 : 1);
                    std::cout << "  " << (sign > 0 ? "+" : "-") << " (";
                    for (int e : basis3[static_cast<std::size_t>(c[i])]) std::cout << e << " ";
                    std::cout << ")\n";
                }
                found = true;
            }
            if (found) break;
            // next combination
            int i = support - 1;
            while (i >= 0 && c[i] == nb - support + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < support; ++j) c[j] = c[j - 1] + 1;
        }
        if (found) break;
    }
    return 0;
}
