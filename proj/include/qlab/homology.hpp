// Quandle/rack homology of a finite quandle: H_n = ker d_n / im d_{n+1},
// presented as free rank plus invariant factors via integer Smith normal
// form, with an independent mod-p dimension count for cross-checking.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlab/boundary.hpp"
#include "qlab/chain.hpp"
#include "qlab/errors.hpp"
#include "qlab/modp.hpp"
#include "qlab/snf.hpp"

namespace qlab {

inline constexpr std::size_t kDefaultBasisLimit = 20000;

struct AbelianGroupInvariants {
    std::int64_t free_rank = 0;
    std::vector<BigInt> torsion; // invariant factors > 1, divisibility chain

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    bool operator==(const AbelianGroupInvariants& other) const {
        return free_rank == other.free_rank && torsion == other.torsion;
    }

    std::string to_string() const {
        if (is_trivial()) return "0";
        std::string s;
        auto append = [&s](const std::string& part) {
            if (!s.empty()) s += " + ";
            s += part;
        };
        if (free_rank == 1) append("Z");
        else if (free_rank > 1) append("Z^" + std::to_string(free_rank));
        for (const auto& d : torsion) append("Z/" + d.str());
        return s;
    }
};

namespace detail {

inline void check_basis_limit(const FiniteQuandle& x, int degree, std::size_t limit) {
    std::size_t count = 1;
    for (int i = 0; i < degree; ++i) {
        count *= static_cast<std::size_t>(x.size());
        if (count > limit)
            throw domain_error("basis of C_" + std::to_string(degree) + "(" + x.label() +
                               ") exceeds the configured limit of " + std::to_string(limit) +
                               " tuples");
    }
}

} // namespace detail

// H_n(X) for the chosen theory, from the Smith normal forms of d_n and
// d_{n+1}: free rank = dim C_n - rank d_n - rank d_{n+1}, torsion = the
// invariant factors of d_{n+1} that exceed 1.
inline AbelianGroupInvariants homology(const FiniteQuandle& x, int degree, Theory theory,
                                       std::size_t basis_limit = kDefaultBasisLimit) {
    if (degree < 1) throw domain_error("homology requires degree >= 1");
    detail::check_basis_limit(x, degree + 1, basis_limit);

    const MatZ d_n = boundary_matrix<BigInt>(x, degree, theory);
    const MatZ d_next = boundary_matrix<BigInt>(x, degree + 1, theory);

    const SmithNormalForm snf_n = smith_normal_form(d_n);
    const SmithNormalForm snf_next = smith_normal_form(d_next);

    AbelianGroupInvariants out;
    out.free_rank = static_cast<std::int64_t>(d_n.cols()) - snf_n.rank - snf_next.rank;
    for (const auto& d : snf_next.invariant_factors)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

// dim_{F_p}(ker d_n / im d_{n+1} over F_p), computed purely by mod-p ranks.
// Independent route used to cross-check the integer computation.
inline std::int64_t homology_dim_mod_p(const FiniteQuandle& x, int degree, Theory theory, int p,
                                       std::size_t basis_limit = kDefaultBasisLimit) {
    if (degree < 1) throw domain_error("homology requires degree >= 1");
    if (!is_prime(p)) throw domain_error("mod-p homology dimension requires prime p");
    detail::check_basis_limit(x, degree + 1, basis_limit);

    const MatI d_n = boundary_matrix<int>(x, degree, theory);
    const MatI d_next = boundary_matrix<int>(x, degree + 1, theory);
    return static_cast<std::int64_t>(d_n.cols()) - rank_mod_p(d_n, p) - rank_mod_p(d_next, p);
}

// What the integral answer predicts for the mod-p computation. By universal
// coefficients, dim_{F_p} H_n(C x F_p) = dim(H_n x F_p) + dim Tor(H_{n-1}, F_p):
// free rank of H_n plus the p-divisible invariant factors of H_n and H_{n-1}.
inline std::int64_t predicted_dim_mod_p(const AbelianGroupInvariants& h_n,
                                        const AbelianGroupInvariants& h_prev, int p) {
    std::int64_t dim = h_n.free_rank;
    for (const auto& d : h_n.torsion)
        if (d % p == 0) ++dim;
    for (const auto& d : h_prev.torsion)
        if (d % p == 0) ++dim;
    return dim;
}

} // namespace qlab
