// Development scratch 2: dry-run the twist-spun-trefoil fixture pipeline
// and print the goldens to freeze.
#include <chrono>
#include <iostream>
#include <vector>

#include "qlab/boundary.hpp"
#include "qlab/chain.hpp"
#include "qlab/cocycles.hpp"
#include "qlab/diagram.hpp"
#include "qlab/state_sum.hpp"

using namespace qlab;

static DiagramDatum twist_fixture() {
    DiagramDatum fx;
    fx.name = "twist_spun_trefoil";
    fx.sheets = {"a", "b", "c"};
    fx.relations = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
    fx.triple_points = {{0, 1, 2, +1}, {0, 2, 1, +1}, {1, 2, 0, -1}, {2, 1, 0, -1}};
    return fx;
}

static DiagramDatum trivial_sphere() {
    DiagramDatum d;
    d.name = "trivial_sphere";
    d.sheets = {"a"};
    return d;
}

static DiagramDatum negative_fixture() {
    DiagramDatum fx = twist_fixture();
    fx.name = "bad_triple_point";
    fx.triple_points = {{0, 1, 2, +1}};
    return fx;
}

static void show(const char* label, const GroupRingElement& v) {
    std::cout << label << ": ";
    for (auto c : v.coeffs) std::cout << c << " ";
    std::cout << "(mass " << v.mass() << ")\n";
}

int main() {
    const DiagramDatum fx = twist_fixture();
    const DiagramDatum sphere = trivial_sphere();
    const DiagramDatum bad = negative_fixture();

    Table r4t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) r4t[a][b] = ((2 * b - a) % 4 + 4) % 4;
    const FiniteQuandle r4("R4", r4t);

    std::vector<FiniteQuandle> targets{dihedral(3), r4, dihedral(5), dihedral(7),
                                       trivial_quandle(2), trivial_quandle(5)};
    for (const auto& x : targets) {
        std::cout << x.label() << ": colorings(fx)=" << enumerate_colorings(presentation_of(fx), x).size()
                  << " verify(fx)=" << verify_cycle(fx, x)
                  << " verify(sphere)=" << verify_cycle(sphere, x)
                  << " verify(bad)=" << verify_cycle(bad, x) << "\n";
    }

    const Cochain theta3 = select_distinguished_cocycle(3);
    show("phi(fx, R3)", phi(fx, dihedral(3), theta3));
    show("phi(sphere, R3)", phi(sphere, dihedral(3), theta3));
    show("phi_mirror(phi(fx,R3))", phi_mirror(phi(fx, dihedral(3), theta3)));
    show("phi(negated fx cycle)", phi_with_cycle(fx, negate_cycle(fundamental_cycle(fx)), dihedral(3), theta3));
    show("phi(bad, R3)", phi(bad, dihedral(3), theta3));

    auto t0 = std::chrono::steady_clock::now();
    const Cochain theta5 = select_distinguished_cocycle(5);
    auto t1 = std::chrono::steady_clock::now();
    const Cochain theta7 = select_distinguished_cocycle(7);
    auto t2 = std::chrono::steady_clock::now();
    std::cout << "select(5): " << std::chrono::duration<double>(t1 - t0).count() << "s, support "
              << theta5.values.size() << "\n";
    std::cout << "select(7): " << std::chrono::duration<double>(t2 - t1).count() << "s, support "
              << theta7.values.size() << "\n";
    show("phi(fx, R5)", phi(fx, dihedral(5), theta5));
    show("phi(fx, R7)", phi(fx, dihedral(7), theta7));
    show("phi(sphere, R5)", phi(sphere, dihedral(5), theta5));
    show("phi(sphere, R7)", phi(sphere, dihedral(7), theta7));

    std::cout << "probe(fx, R3, 10): all_equal="
              << invariance_probe(fx, dihedral(3), theta3, 10).all_equal << "\n";
    DiagramDatum dropped = fx;
    dropped.triple_points.pop_back();
    const auto probe_bad = invariance_probe(dropped, dihedral(3), theta3, 20);
    std::cout << "probe(dropped, R3, 20): all_equal=" << probe_bad.all_equal
              << " first_mismatch=" << probe_bad.first_mismatch << "\n";
    show("phi(dropped, R3)", phi(dropped, dihedral(3), theta3));

    // theta3 written in cochain file format for the fixtures directory
    std::cout << "cocycle R3 3 3\n";
    for (const auto& [t, v] : theta3.values) {
        for (int e : t) std::cout << e << " ";
        std::cout << v << "\n";
    }
    return 0;
}
