// Combinatorial surface-knot diagram data: sheets, double-curve relations,
// signed triple points; the fundamental cycle and its pushforward along
// colorings.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qlab/boundary.hpp"
#include "qlab/chain.hpp"
#include "qlab/errors.hpp"
#include "qlab/presentation.hpp"

namespace qlab {

// A triple point: the bottom, middle and top sheet (indices into the owning
// diagram's sheet list) and the sign of the local orientation triple.
struct TriplePoint {
    int bottom = 0;
    int middle = 0;
    int top = 0;
    int sign = 1;
};

struct DiagramDatum {
    std::string name;
    std::vector<std::string> sheets;
    std::vector<std::array<int, 3>> relations; // (behind, over, front)
    std::vector<TriplePoint> triple_points;

    void validate() const {
        const int m = static_cast<int>(sheets.size());
        for (std::size_t i = 0; i < sheets.size(); ++i)
            for (std::size_t j = i + 1; j < sheets.size(); ++j)
                if (sheets[i] == sheets[j])
                    throw structural_error("duplicate sheet '" + sheets[i] + "' in diagram " + name);
        for (const auto& r : relations)
            for (int idx : r)
                if (idx < 0 || idx >= m)
                    throw structural_error("double-curve relation references a missing sheet in diagram " + name);
        for (const auto& tp : triple_points) {
            if (tp.bottom < 0 || tp.bottom >= m || tp.middle < 0 || tp.middle >= m ||
                tp.top < 0 || tp.top >= m)
                throw structural_error("triple point references a missing sheet in diagram " + name);
            if (tp.sign != 1 && tp.sign != -1)
                throw structural_error("triple point sign must be +1 or -1 in diagram " + name);
        }
    }
};

// Generators = sheets, relations = double-curve relations.
inline QuandlePresentation presentation_of(const DiagramDatum& d) {
    d.validate();
    QuandlePresentation p;
    p.generators = d.sheets;
    p.relations = d.relations;
    return p;
}

// A formal integer combination of sheet triples (bottom, middle, top).
using SheetCycle = std::map<std::array<int, 3>, std::int64_t>;

// |D| = sum over triple points of sign * (bottom, middle, top), with like
// triples merged and zeros dropped.
inline SheetCycle fundamental_cycle(const DiagramDatum& d) {
    d.validate();
    SheetCycle cycle;
    for (const auto& tp : d.triple_points) {
        const std::array<int, 3> key{tp.bottom, tp.middle, tp.top};
        auto it = cycle.find(key);
        if (it == cycle.end()) {
            cycle.emplace(key, tp.sign);
        } else if ((it->second += tp.sign) == 0) {
            cycle.erase(it);
        }
    }
    return cycle;
}

inline SheetCycle negate_cycle(const SheetCycle& cycle) {
    SheetCycle out = cycle;
    for (auto& [t, c] : out) c = -c;
    return out;
}

// Replaces each sheet by its color and projects degenerate triples to zero
// (quandle theory); the chain-level c_*.
inline IntChain pushforward(const SheetCycle& cycle, const Coloring& coloring,
                            const FiniteQuandle& x) {
    IntChain out = IntChain::zero(3);
    for (const auto& [sheets, c] : cycle) {
        Tuple colored(3);
        for (int i = 0; i < 3; ++i) {
            const int s = sheets[static_cast<std::size_t>(i)];
            if (s < 0 || static_cast<std::size_t>(s) >= coloring.values.size())
                throw domain_error("pushforward: coloring does not color sheet index " + std::to_string(s));
            colored[static_cast<std::size_t>(i)] = coloring.at(s);
        }
        if (!is_degenerate(colored)) out.add(colored, c);
    }
    return out;
}

// True iff the pushed-forward fundamental cycle is a 3-cycle of C^Q(X) for
// every coloring of the diagram into X. A genuine diagram passes for every
// X; a datum failing any X is malformed.
inline bool verify_cycle(const DiagramDatum& d, const FiniteQuandle& x) {
    const QuandlePresentation p = presentation_of(d);
    const SheetCycle cycle = fundamental_cycle(d);
    for (const Coloring& c : enumerate_colorings(p, x)) {
        const IntChain pushed = pushforward(cycle, c, x);
        if (!boundary(pushed, x, Theory::quandle).is_zero()) return false;
    }
    return true;
}

} // namespace qlab
