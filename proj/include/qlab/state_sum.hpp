// The quandle cocycle state sum: for each coloring of a diagram into X,
// pair the pushed-forward fundamental cycle with a 3-cocycle and tally the
// weights in the group ring Z[Z_q].
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qlab/chain.hpp"
#include "qlab/cocycles.hpp"
#include "qlab/diagram.hpp"
#include "qlab/errors.hpp"
#include "qlab/presentation.hpp"

namespace qlab {

// An element of Z[Z_q]: coeffs[a] is the coefficient of t^a.
struct GroupRingElement {
    int modulus = 0;
    std::vector<std::int64_t> coeffs;

    static GroupRingElement zero(int q) {
        return GroupRingElement{q, std::vector<std::int64_t>(static_cast<std::size_t>(q), 0)};
    }

    std::int64_t mass() const {
        std::int64_t m = 0;
        for (auto c : coeffs) m += c;
        return m;
    }

    bool operator==(const GroupRingElement& other) const {
        return modulus == other.modulus && coeffs == other.coeffs;
    }
};

// The t -> t^{-1} involution: coefficient of a moves to -a mod q. Models the
// invariant of the orientation-reversed mirror image.
inline GroupRingElement phi_mirror(const GroupRingElement& v) {
    GroupRingElement out = GroupRingElement::zero(v.modulus);
    for (int a = 0; a < v.modulus; ++a)
        out.coeffs[static_cast<std::size_t>((v.modulus - a) % v.modulus)] =
            v.coeffs[static_cast<std::size_t>(a)];
    return out;
}

// State sum with an explicit cycle (used for the mirror identity and by the
// probe); phi() below is the diagram entry point.
inline GroupRingElement phi_with_cycle(const DiagramDatum& d, const SheetCycle& cycle,
                                       const FiniteQuandle& x, const Cochain& theta) {
    if (theta.degree != 3) throw domain_error("state sum requires a 3-cocycle");
    if (!is_cocycle(theta, x))
        throw domain_error("state sum weight function is not a cocycle over " + x.label());
    GroupRingElement out = GroupRingElement::zero(theta.modulus);
    const QuandlePresentation p = presentation_of(d);
    for (const Coloring& c : enumerate_colorings(p, x)) {
        const int w = kronecker(pushforward(cycle, c, x), theta);
        ++out.coeffs[static_cast<std::size_t>(w)];
    }
    return out;
}

inline GroupRingElement phi(const DiagramDatum& d, const FiniteQuandle& x, const Cochain& theta) {
    return phi_with_cycle(d, fundamental_cycle(d), x, theta);
}

struct ProbeReport {
    int trials = 0;
    bool all_equal = false;
    GroupRingElement baseline;
    int first_mismatch = -1; // trial index, or -1
};

namespace detail {

inline DiagramDatum relabel_sheets(const DiagramDatum& d, const std::vector<int>& perm) {
    // perm maps old sheet index -> new sheet index
    DiagramDatum out;
    out.name = d.name;
    out.sheets.resize(d.sheets.size());
    for (std::size_t i = 0; i < d.sheets.size(); ++i)
        out.sheets[static_cast<std::size_t>(perm[i])] = d.sheets[i];
    for (const auto& r : d.relations)
        out.relations.push_back({perm[static_cast<std::size_t>(r[0])],
                                 perm[static_cast<std::size_t>(r[1])],
                                 perm[static_cast<std::size_t>(r[2])]});
    for (const auto& tp : d.triple_points)
        out.triple_points.push_back({perm[static_cast<std::size_t>(tp.bottom)],
                                     perm[static_cast<std::size_t>(tp.middle)],
                                     perm[static_cast<std::size_t>(tp.top)], tp.sign});
    return out;
}

inline Cochain random_two_cochain(const FiniteQuandle& x, int q, std::mt19937& rng) {
    Cochain phi2 = Cochain::zero(2, q);
    std::uniform_int_distribution<int> value(0, q - 1);
    for (const Tuple& t : tuple_basis(x.size(), 2, Theory::quandle)) phi2.set(t, value(rng));
    return phi2;
}

} // namespace detail

// Recomputes the state sum under random sheet relabelings combined with
// random coboundary shifts of theta, and reports whether every trial agreed
// with the baseline. Deterministic for a fixed seed.
inline ProbeReport invariance_probe(const DiagramDatum& d, const FiniteQuandle& x,
                                    const Cochain& theta, int trials,
                                    std::uint32_t seed = 20251205) {
    ProbeReport report;
    report.trials = trials;
    report.baseline = phi(d, x, theta);
    report.all_equal = true;

    std::mt19937 rng(seed);
    std::vector<int> perm(d.sheets.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);

    for (int trial = 0; trial < trials; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        const DiagramDatum relabeled = detail::relabel_sheets(d, perm);
        const Cochain shifted = theta + coboundary(detail::random_two_cochain(x, theta.modulus, rng), x);
        if (!(phi(relabeled, x, shifted) == report.baseline)) {
            report.all_equal = false;
            report.first_mismatch = trial;
            return report;
        }
    }
    return report;
}

} // namespace qlab
