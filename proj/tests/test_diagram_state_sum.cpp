// Diagram data, fundamental cycles, pushforwards, cycle verification, and
// the cocycle state sum on the shipped fixtures.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "qlab/boundary.hpp"
#include "qlab/cocycles.hpp"
#include "qlab/diagram.hpp"
#include "qlab/io.hpp"
#include "qlab/state_sum.hpp"

using namespace qlab;

namespace {

std::string fixture(const std::string& name) {
    return std::string(QLAB_FIXTURE_DIR) + "/" + name;
}

DiagramDatum load_fixture(const std::string& name) { return load_diagram(fixture(name)); }

GroupRingElement make_gre(int q, std::vector<std::int64_t> coeffs) {
    return GroupRingElement{q, std::move(coeffs)};
}

} // namespace

TEST_CASE("trivial sphere: free presentation on one generator") {
    const DiagramDatum d = load_fixture("trivial_sphere.diagram");
    const QuandlePresentation p = presentation_of(d);
    CHECK(p.generators.size() == 1);
    CHECK(p.relations.empty());
    CHECK(fundamental_cycle(d).empty());
    for (int pr : {3, 5, 7})
        CHECK(enumerate_colorings(p, dihedral(pr)).size() == static_cast<std::size_t>(pr));
}

TEST_CASE("twist-spun trefoil fixture: presentation and coloring counts") {
    const DiagramDatum d = load_fixture("twist_spun_trefoil.diagram");
    const QuandlePresentation p = presentation_of(d);
    CHECK(p.generators.size() == d.sheets.size());
    CHECK(enumerate_colorings(p, dihedral(3)).size() == 9);
    CHECK(enumerate_colorings(p, dihedral(5)).size() == 5);
    CHECK(enumerate_colorings(p, dihedral(7)).size() == 7);
}

TEST_CASE("fundamental cycle bookkeeping") {
    DiagramDatum d;
    d.name = "toy";
    d.sheets = {"a", "b", "c"};

    SUBCASE("no triple points gives the zero sum") { CHECK(fundamental_cycle(d).empty()); }

    SUBCASE("a single positive triple point") {
        d.triple_points = {{0, 1, 2, +1}};
        const SheetCycle z = fundamental_cycle(d);
        CHECK(z.size() == 1);
        CHECK(z.at({0, 1, 2}) == 1);
    }

    SUBCASE("opposite triple points cancel") {
        d.triple_points = {{0, 1, 2, +1}, {0, 1, 2, -1}};
        CHECK(fundamental_cycle(d).empty());
    }

    SUBCASE("invariant under reordering the triple point list") {
        d.triple_points = {{0, 1, 2, +1}, {1, 2, 0, -1}, {0, 1, 2, +1}};
        DiagramDatum e = d;
        std::swap(e.triple_points[0], e.triple_points[1]);
        CHECK(fundamental_cycle(d) == fundamental_cycle(e));
    }
}

TEST_CASE("negate_cycle") {
    const DiagramDatum d = load_fixture("twist_spun_trefoil.diagram");
    const SheetCycle z = fundamental_cycle(d);
    CHECK(negate_cycle(SheetCycle{}).empty());
    CHECK(negate_cycle(negate_cycle(z)) == z);
}

TEST_CASE("pushforward") {
    const DiagramDatum d = load_fixture("twist_spun_trefoil.diagram");
    const FiniteQuandle r3 = dihedral(3);
    const QuandlePresentation p = presentation_of(d);
    const SheetCycle z = fundamental_cycle(d);

    SUBCASE("constant colorings push to zero in the quandle theory") {
        for (int a = 0; a < 3; ++a) {
            const Coloring c{{a, a, a}};
            CHECK(pushforward(z, c, r3).is_zero());
        }
    }

    SUBCASE("the zero cycle pushes to zero") {
        const Coloring c{{0, 1, 2}};
        CHECK(pushforward(SheetCycle{}, c, r3).is_zero());
    }

    SUBCASE("nonconstant colorings give 3-cycles") {
        int nonconstant = 0;
        for (const Coloring& c : enumerate_colorings(p, r3)) {
            const IntChain pushed = pushforward(z, c, r3);
            CHECK(boundary(pushed, r3, Theory::quandle).is_zero());
            if (!pushed.is_zero()) ++nonconstant;
        }
        CHECK(nonconstant == 6);
    }

    SUBCASE("uncolored sheets are a domain error") {
        const Coloring short_coloring{{0, 1}};
        CHECK_THROWS_AS(pushforward(z, short_coloring, r3), domain_error);
    }

    SUBCASE("pushforward commutes with negation") {
        const Coloring c{{0, 1, 2}};
        IntChain lhs = pushforward(negate_cycle(z), c, r3);
        lhs += pushforward(z, c, r3);
        CHECK(lhs.is_zero());
    }
}

TEST_CASE("verify_cycle on the shipped fixtures") {
    const DiagramDatum sphere = load_fixture("trivial_sphere.diagram");
    const DiagramDatum twist = load_fixture("twist_spun_trefoil.diagram");
    const DiagramDatum bad = load_fixture("bad_triple_point.diagram");

    for (int p : {1, 3, 5, 7}) {
        const FiniteQuandle x = dihedral(p);
        CHECK(verify_cycle(sphere, x));
        CHECK(verify_cycle(twist, x));
    }
    CHECK(verify_cycle(twist, trivial_quandle(4)));
    CHECK_FALSE(verify_cycle(bad, dihedral(3)));
}

TEST_CASE("diagram structural validation") {
    DiagramDatum d;
    d.name = "broken";
    d.sheets = {"a"};
    d.relations = {{0, 0, 1}};
    CHECK_THROWS_AS(d.validate(), structural_error);

    DiagramDatum e;
    e.name = "broken2";
    e.sheets = {"a", "b", "c"};
    e.triple_points = {{0, 1, 2, 3}};
    CHECK_THROWS_AS(e.validate(), structural_error);
}

TEST_CASE("state sum on the trivial sphere is |X| t^0") {
    const DiagramDatum sphere = load_fixture("trivial_sphere.diagram");
    for (int p : {3, 5, 7}) {
        const GroupRingElement v = phi(sphere, dihedral(p), select_distinguished_cocycle(p));
        std::vector<std::int64_t> expected(static_cast<std::size_t>(p), 0);
        expected[0] = p;
        CHECK(v == make_gre(p, expected));
    }
}

TEST_CASE("state sum of the twist-spun trefoil fixture (golden)") {
    const DiagramDatum twist = load_fixture("twist_spun_trefoil.diagram");
    const Cochain theta = select_distinguished_cocycle(3);
    const GroupRingElement v = phi(twist, dihedral(3), theta);
    CHECK(v == make_gre(3, {3, 0, 6})); // 3 + 6t^2, nontrivial
    CHECK(v.mass() == 9);
    CHECK(v.coeffs[0] >= 3); // constant colorings land on t^0

    // trivial over R_5 and R_7: only constant colorings exist
    CHECK(phi(twist, dihedral(5), select_distinguished_cocycle(5)) ==
          make_gre(5, {5, 0, 0, 0, 0}));
    CHECK(phi(twist, dihedral(7), select_distinguished_cocycle(7)) ==
          make_gre(7, {7, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("state sum with the zero cocycle counts colorings at t^0") {
    const DiagramDatum twist = load_fixture("twist_spun_trefoil.diagram");
    const GroupRingElement v = phi(twist, dihedral(3), Cochain::zero(3, 3));
    CHECK(v == make_gre(3, {9, 0, 0}));
}

TEST_CASE("state sum rejects non-cocycles") {
    const DiagramDatum twist = load_fixture("twist_spun_trefoil.diagram");
    const FiniteQuandle r3 = dihedral(3);
    Cochain not_cocycle = Cochain::zero(3, 3);
    not_cocycle.set({0, 1, 0}, 1);
    REQUIRE_FALSE(is_cocycle(not_cocycle, r3));
    CHECK_THROWS_AS(phi(twist, r3, not_cocycle), domain_error);
    CHECK_THROWS_AS(phi(twist, r3, Cochain::zero(2, 3)), domain_error);
}

TEST_CASE("coboundary shifts do not change the state sum") {
    const DiagramDatum twist = load_fixture("twist_spun_trefoil.diagram");
    const FiniteQuandle r3 = dihedral(3);
    const Cochain theta = select_distinguished_cocycle(3);
    const GroupRingElement base = phi(twist, r3, theta);
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> value(0, 2);
    for (int trial = 0; trial < 10; ++trial) {
        Cochain shift = Cochain::zero(2, 3);
        for (const Tuple& t : tuple_basis(3, 2, Theory::quandle)) shift.set(t, value(rng));
        CHECK(phi(twist, r3, theta + coboundary(shift, r3)) == base);
    }
}

TEST_CASE("phi_mirror") {
    const GroupRingElement v = make_gre(3, {3, 0, 6});
    CHECK(phi_mirror(v) == make_gre(3, {3, 6, 0}));
    CHECK(phi_mirror(phi_mirror(v)) == v);
    const GroupRingElement symmetric = make_gre(5, {1, 2, 3, 3, 2});
    CHECK(phi_mirror(symmetric) == symmetric);
}

TEST_CASE("the negated-cycle state sum equals the mirrored state sum") {
    const DiagramDatum twist = load_fixture("twist_spun_trefoil.diagram");
    const FiniteQuandle r3 = dihedral(3);
    const Cochain theta = select_distinguished_cocycle(3);
    const GroupRingElement direct = phi(twist, r3, theta);
    const GroupRingElement negated =
        phi_with_cycle(twist, negate_cycle(fundamental_cycle(twist)), r3, theta);
    CHECK(negated == phi_mirror(direct));
    CHECK(negated == make_gre(3, {3, 6, 0}));
}

TEST_CASE("total mass equals the coloring count on every fixture") {
    for (const char* name :
         {"trivial_sphere.diagram", "twist_spun_trefoil.diagram", "bad_triple_point.diagram"}) {
        const DiagramDatum d = load_fixture(name);
        for (int p : {3, 5}) {
            const FiniteQuandle x = dihedral(p);
            const auto colorings = enumerate_colorings(presentation_of(d), x);
            CHECK(phi(d, x, select_distinguished_cocycle(p)).mass() ==
                  static_cast<std::int64_t>(colorings.size()));
        }
    }
}

TEST_CASE("invariance probe: fixtures pass, an injected bug is caught") {
    const FiniteQuandle r3 = dihedral(3);
    const Cochain theta = select_distinguished_cocycle(3);

    const DiagramDatum sphere = load_fixture("trivial_sphere.diagram");
    CHECK(invariance_probe(sphere, r3, theta, 10).all_equal);

    const DiagramDatum twist = load_fixture("twist_spun_trefoil.diagram");
    const ProbeReport good = invariance_probe(twist, r3, theta, 25);
    CHECK(good.all_equal);
    CHECK(good.baseline == make_gre(3, {3, 0, 6}));

    DiagramDatum dropped = twist;
    dropped.triple_points.pop_back(); // skip one triple point
    const ProbeReport bad = invariance_probe(dropped, r3, theta, 20);
    CHECK_FALSE(bad.all_equal);
    CHECK(bad.first_mismatch >= 0);
}
