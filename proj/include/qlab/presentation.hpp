// Quandle presentations (generators, relations s_i*s_j = s_k, equalities)
// and enumeration of colorings, i.e. homomorphisms into a finite quandle.
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qlab/errors.hpp"
#include "qlab/quandle.hpp"

namespace qlab {

// Generators are referenced by index into `generators`. A relation {i,j,k}
// states s_i * s_j = s_k; an equality {i,j} states s_i = s_j.
struct QuandlePresentation {
    std::vector<std::string> generators;
    std::vector<std::array<int, 3>> relations;
    std::vector<std::pair<int, int>> equalities;

    int generator_index(const std::string& name) const {
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i] == name) return static_cast<int>(i);
        return -1;
    }

    void validate() const {
        const int m = static_cast<int>(generators.size());
        for (std::size_t i = 0; i < generators.size(); ++i)
            for (std::size_t j = i + 1; j < generators.size(); ++j)
                if (generators[i] == generators[j])
                    throw structural_error("duplicate generator '" + generators[i] + "'");
        for (const auto& r : relations)
            for (int idx : r)
                if (idx < 0 || idx >= m)
                    throw structural_error("relation references undeclared generator");
        for (const auto& e : equalities)
            if (e.first < 0 || e.first >= m || e.second < 0 || e.second >= m)
                throw structural_error("equality references undeclared generator");
    }
};

// An assignment of quandle elements to all generators of a presentation.
struct Coloring {
    std::vector<int> values; // indexed by generator position

    int at(int generator) const { return values[static_cast<std::size_t>(generator)]; }

    bool satisfies(const QuandlePresentation& p, const FiniteQuandle& x) const {
        for (const auto& r : p.relations)
            if (x.op(at(r[0]), at(r[1])) != at(r[2])) return false;
        for (const auto& e : p.equalities)
            if (at(e.first) != at(e.second)) return false;
        return true;
    }
};

// All colorings of P into X, in lexicographic order (generator order as
// declared, element order 0..n-1). Backtracking with early constraint
// checks; constraints are tested as soon as every generator they mention
// has a value.
inline std::vector<Coloring> enumerate_colorings(const QuandlePresentation& p,
                                                 const FiniteQuandle& x) {
    p.validate();
    const int m = static_cast<int>(p.generators.size());
    const int n = x.size();

    // constraints indexed by the latest generator they mention
    std::vector<std::vector<std::array<int, 3>>> rel_at(m);
    std::vector<std::vector<std::pair<int, int>>> eq_at(m);
    for (const auto& r : p.relations)
        rel_at[static_cast<std::size_t>(std::max({r[0], r[1], r[2]}))].push_back(r);
    for (const auto& e : p.equalities)
        eq_at[static_cast<std::size_t>(std::max(e.first, e.second))].push_back(e);

    std::vector<Coloring> out;
    std::vector<int> assign(m, -1);

    auto consistent = [&](int g) {
        for (const auto& r : rel_at[g])
            if (x.op(assign[r[0]], assign[r[1]]) != assign[r[2]]) return false;
        for (const auto& e : eq_at[g])
            if (assign[e.first] != assign[e.second]) return false;
        return true;
    };

    // m == 0: the empty presentation has exactly one (empty) coloring.
    std::vector<int> stack;
    int g = 0;
    if (m == 0) {
        out.push_back(Coloring{{}});
        return out;
    }
    while (g >= 0) {
        ++assign[g];
        if (assign[g] >= n) {
            assign[g] = -1;
            --g;
            continue;
        }
        if (!consistent(g)) continue;
        if (g + 1 == m) {
            out.push_back(Coloring{assign});
        } else {
            ++g;
        }
    }
    return out;
}

// Connected-sum presentation: disjoint union of P1 and P2 plus the equality
// identifying one chosen generator of each. Generator names are prefixed
// "1." and "2." to keep the namespaces apart.
inline QuandlePresentation connected_sum(const QuandlePresentation& p1,
                                         const QuandlePresentation& p2,
                                         const std::string& g1, const std::string& g2) {
    p1.validate();
    p2.validate();
    const int i1 = p1.generator_index(g1);
    const int i2 = p2.generator_index(g2);
    if (i1 < 0) throw domain_error("connected_sum: '" + g1 + "' is not a generator of the first presentation");
    if (i2 < 0) throw domain_error("connected_sum: '" + g2 + "' is not a generator of the second presentation");

    QuandlePresentation out;
    for (const auto& g : p1.generators) out.generators.push_back("1." + g);
    for (const auto& g : p2.generators) out.generators.push_back("2." + g);
    const int shift = static_cast<int>(p1.generators.size());
    out.relations = p1.relations;
    for (const auto& r : p2.relations)
        out.relations.push_back({r[0] + shift, r[1] + shift, r[2] + shift});
    out.equalities = p1.equalities;
    for (const auto& e : p2.equalities)
        out.equalities.push_back({e.first + shift, e.second + shift});
    out.equalities.push_back({i1, i2 + shift});
    return out;
}

// The knot quandle of a surface-knot has the same presentation as that of
// its orientation-reversed mirror image, so at the presentation level this
// map is the identity. It exists to make that identification explicit.
inline QuandlePresentation reverse_mirror_presentation(const QuandlePresentation& p) {
    return p;
}

} // namespace qlab
