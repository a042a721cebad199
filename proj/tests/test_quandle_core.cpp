// Quandle axioms, standard constructions, coloring enumeration.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "qlab/presentation.hpp"
#include "qlab/quandle.hpp"

using namespace qlab;

namespace {

QuandlePresentation trefoil() {
    QuandlePresentation p;
    p.generators = {"a", "b", "c"};
    p.relations = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    return p;
}

// brute-force coloring oracle, independent of enumerate_colorings
long long count_colorings_brute(const QuandlePresentation& p, const FiniteQuandle& x) {
    const int m = static_cast<int>(p.generators.size());
    const int n = x.size();
    long long total = 1;
    for (int i = 0; i < m; ++i) total *= n;
    long long count = 0;
    for (long long code = 0; code < total; ++code) {
        std::vector<int> v(m);
        long long c = code;
        for (int i = 0; i < m; ++i) {
            v[i] = static_cast<int>(c % n);
            c /= n;
        }
        bool ok = true;
        for (const auto& r : p.relations)
            if (x.op(v[r[0]], v[r[1]]) != v[r[2]]) ok = false;
        for (const auto& e : p.equalities)
            if (v[e.first] != v[e.second]) ok = false;
        if (ok) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("axioms pass on the trivial quandle") {
    Table t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[a][b] = a;
    CHECK(check_axioms(t).pass());
}

TEST_CASE("axioms pass on dihedral tables, exhaustively checked") {
    for (int p : {1, 3, 5, 7}) {
        const FiniteQuandle x = dihedral(p);
        const Table t = x.table();
        CHECK(check_axioms(t).pass());
        // independent exhaustive re-check of all three axioms
        for (int a = 0; a < p; ++a) CHECK(t[a][a] == a);
        for (int b = 0; b < p; ++b) {
            std::set<int> image;
            for (int a = 0; a < p; ++a) image.insert(t[a][b]);
            CHECK(image.size() == static_cast<std::size_t>(p));
        }
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b)
                for (int c = 0; c < p; ++c)
                    CHECK(t[t[a][b]][c] == t[t[a][c]][t[b][c]]);
    }
}

TEST_CASE("Q1 violation is reported with a witness") {
    Table t{{1, 0}, {1, 1}};
    const AxiomReport r = check_axioms(t);
    CHECK_FALSE(r.pass());
    CHECK(r.axiom == 1);
    CHECK(r.witness == std::vector<int>{0});
}

TEST_CASE("Q2 and Q3 violations are identified") {
    // columns not bijective: a*b = a except column 0 collapses
    Table q2{{0, 0, 0}, {0, 1, 1}, {0, 2, 2}};
    CHECK(check_axioms(q2).axiom == 2);

    // idempotent, bijective columns, but (0*1)*2 != (0*2)*(1*2)
    Table q3{{0, 2, 1}, {1, 1, 0}, {2, 0, 2}};
    const AxiomReport r = check_axioms(q3);
    CHECK(r.axiom == 3);
    CHECK(r.witness.size() == 3);
}

TEST_CASE("malformed tables are structural errors, not axiom failures") {
    CHECK_THROWS_AS(check_axioms(Table{{0, 1}, {1}}), structural_error);
    CHECK_THROWS_AS(check_axioms(Table{{0, 5}, {1, 1}}), structural_error);
    CHECK_THROWS_AS(check_axioms(Table{}), structural_error);
}

TEST_CASE("FiniteQuandle construction validates the axioms") {
    CHECK_THROWS_AS(FiniteQuandle("bad", Table{{1, 0}, {1, 1}}), domain_error);
    const FiniteQuandle x("R3", Table{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
    CHECK(x.op(1, 0) == 2);
}

TEST_CASE("dihedral quandle values and domain") {
    CHECK(dihedral(1).size() == 1);
    CHECK(dihedral(3).op(1, 0) == 2); // 2*0 - 1 = -1 = 2 mod 3
    CHECK_THROWS_AS(dihedral(0), domain_error);
    CHECK_THROWS_AS(dihedral(4), domain_error);
    CHECK_THROWS_AS(dihedral(-3), domain_error);
}

TEST_CASE("dihedral right translations are involutions") {
    for (int p : {1, 3, 5, 7, 9, 11}) {
        const FiniteQuandle x = dihedral(p);
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) CHECK(x.op(x.op(a, b), b) == a);
    }
}

TEST_CASE("trefoil colorings into R_3: nine, matching the brute-force oracle") {
    const QuandlePresentation p = trefoil();
    const FiniteQuandle r3 = dihedral(3);
    const auto colorings = enumerate_colorings(p, r3);
    CHECK(colorings.size() == 9);
    CHECK(count_colorings_brute(p, r3) == 9);
    for (const auto& c : colorings) CHECK(c.satisfies(p, r3));
}

TEST_CASE("coloring list is lexicographic and duplicate-free") {
    const auto colorings = enumerate_colorings(trefoil(), dihedral(3));
    for (std::size_t i = 0; i + 1 < colorings.size(); ++i)
        CHECK(colorings[i].values < colorings[i + 1].values);
}

TEST_CASE("one-element quandle admits exactly one coloring") {
    CHECK(enumerate_colorings(trefoil(), trivial_quandle(1)).size() == 1);
}

TEST_CASE("free presentations have |X|^m colorings") {
    QuandlePresentation free3;
    free3.generators = {"x", "y", "z"};
    CHECK(enumerate_colorings(free3, dihedral(5)).size() == 125);
    CHECK(enumerate_colorings(free3, trivial_quandle(2)).size() == 8);
}

TEST_CASE("coloring count is invariant under renaming and reordering generators") {
    const QuandlePresentation p = trefoil();
    QuandlePresentation q;
    q.generators = {"w2", "w0", "w1"}; // c, a, b reordered and renamed
    auto remap = [](int i) { return (i + 1) % 3; };
    for (const auto& r : p.relations) q.relations.push_back({remap(r[0]), remap(r[1]), remap(r[2])});
    for (int pr : {3, 5}) {
        CHECK(enumerate_colorings(p, dihedral(pr)).size() ==
              enumerate_colorings(q, dihedral(pr)).size());
    }
}

TEST_CASE("coloring counts divisible by the constant-coloring count") {
    for (int pr : {3, 5, 7}) {
        const FiniteQuandle x = dihedral(pr);
        const auto n = enumerate_colorings(trefoil(), x).size();
        CHECK(n % static_cast<std::size_t>(x.size()) == 0);
        CHECK(n >= static_cast<std::size_t>(x.size()));
    }
}

TEST_CASE("connected sum of two trefoils") {
    const QuandlePresentation p = trefoil();
    const QuandlePresentation s = connected_sum(p, p, "a", "a");
    CHECK(s.generators.size() == 6);
    CHECK(s.relations.size() == 6);
    CHECK(s.equalities.size() == 1);
    CHECK(s.generators[0] == "1.a");
    CHECK(s.generators[3] == "2.a");

    const auto colorings = enumerate_colorings(s, dihedral(3));
    CHECK(colorings.size() == 27); // 9*9/3 pairs agreeing at the basepoint
    CHECK(count_colorings_brute(s, dihedral(3)) == 27);
}

TEST_CASE("connected sum with a one-generator free presentation changes nothing") {
    QuandlePresentation point;
    point.generators = {"z"};
    const QuandlePresentation p = trefoil();
    const QuandlePresentation s = connected_sum(p, point, "b", "z");
    for (int pr : {3, 5}) {
        CHECK(enumerate_colorings(s, dihedral(pr)).size() ==
              enumerate_colorings(p, dihedral(pr)).size());
    }
}

TEST_CASE("connected sum rejects unknown generators") {
    const QuandlePresentation p = trefoil();
    CHECK_THROWS_AS(connected_sum(p, p, "a", "nope"), domain_error);
    CHECK_THROWS_AS(connected_sum(p, p, "nope", "a"), domain_error);
}

TEST_CASE("reverse-mirror presentation is the identity") {
    const QuandlePresentation p = trefoil();
    const QuandlePresentation q = reverse_mirror_presentation(p);
    CHECK(q.generators == p.generators);
    CHECK(q.relations == p.relations);
    CHECK(q.equalities == p.equalities);
    CHECK(enumerate_colorings(q, dihedral(3)).size() ==
          enumerate_colorings(p, dihedral(3)).size());

    // connected sums with P and with its reverse-mirror are literally equal
    const auto s1 = connected_sum(p, p, "a", "b");
    const auto s2 = connected_sum(p, reverse_mirror_presentation(p), "a", "b");
    CHECK(s1.generators == s2.generators);
    CHECK(s1.relations == s2.relations);
    CHECK(s1.equalities == s2.equalities);
}

TEST_CASE("presentations validate their references") {
    QuandlePresentation p;
    p.generators = {"a"};
    p.relations = {{0, 0, 1}};
    CHECK_THROWS_AS(p.validate(), structural_error);
    CHECK_THROWS_AS(enumerate_colorings(p, dihedral(3)), structural_error);
}
