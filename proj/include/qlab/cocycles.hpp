// Quandle cohomology over Z_q: the coboundary map, cocycle/coboundary bases
// by elimination over F_q, and the distinguished 3-cocycle of R_p used by
// the state-sum invariant.
#pragma once

#include <vector>

#include "qlab/boundary.hpp"
#include "qlab/chain.hpp"
#include "qlab/errors.hpp"
#include "qlab/homology.hpp"
#include "qlab/modp.hpp"
#include "qlab/quandle.hpp"

namespace qlab {

// (delta phi)(t) = phi(d t), reduced mod q. Output vanishes on degenerate
// tuples because it is only ever evaluated on the non-degenerate basis.
inline Cochain coboundary(const Cochain& phi, const FiniteQuandle& x) {
    Cochain out = Cochain::zero(phi.degree + 1, phi.modulus);
    for (const Tuple& t : tuple_basis(x.size(), phi.degree + 1, Theory::quandle)) {
        IntChain dt = IntChain::zero(phi.degree);
        detail::boundary_of_tuple(t, x, dt, 1);
        out.set(t, kronecker(dt, phi));
    }
    return out;
}

// True iff delta theta = 0, i.e. theta(d t) = 0 for every non-degenerate
// tuple t one degree up.
inline bool is_cocycle(const Cochain& theta, const FiniteQuandle& x) {
    const Cochain d = coboundary(theta, x);
    return d.values.empty();
}

struct CocycleSolution {
    std::vector<Cochain> cocycle_basis;    // basis of Z^n_Q(X; Z_q)
    std::vector<Cochain> coboundary_basis; // basis of B^n_Q(X; Z_q), RREF rows
    Eigen::Index h_dim = 0;                // dim H^n_Q(X; Z_q)
};

namespace detail {

inline Cochain cochain_from_vector(const VecI& v, const std::vector<Tuple>& basis, int degree,
                                   int q) {
    Cochain c = Cochain::zero(degree, q);
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) != 0) c.set(basis[static_cast<std::size_t>(i)], v(i));
    return c;
}

inline VecI vector_from_cochain(const Cochain& c, const std::vector<Tuple>& basis) {
    VecI v = VecI::Zero(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) v(static_cast<Eigen::Index>(i)) = c(basis[i]);
    return v;
}

} // namespace detail

// Cocycles and coboundaries of degree n over F_q (q prime). In the
// lexicographic non-degenerate tuple basis, delta^n is the transpose of the
// boundary matrix d_{n+1}, so Z^n = ker(d_{n+1}^T) and B^n = rowspace(d_n).
inline CocycleSolution solve_cocycles(const FiniteQuandle& x, int q, int degree,
                                      std::size_t basis_limit = kDefaultBasisLimit) {
    if (!is_prime(q)) throw domain_error("solve_cocycles requires a prime modulus q");
    if (degree < 2) throw domain_error("solve_cocycles requires degree >= 2");
    detail::check_basis_limit(x, degree + 1, basis_limit);

    const std::vector<Tuple> basis = tuple_basis(x.size(), degree, Theory::quandle);
    const MatI d_n = boundary_matrix<int>(x, degree, Theory::quandle);
    const MatI d_next = boundary_matrix<int>(x, degree + 1, Theory::quandle);

    CocycleSolution out;
    const MatI delta = d_next.transpose();
    for (const VecI& v : nullspace_mod_p(delta, q))
        out.cocycle_basis.push_back(detail::cochain_from_vector(v, basis, degree, q));

    const RrefModP b_space = rref_mod_p(d_n, q);
    for (Eigen::Index r = 0; r < b_space.rank(); ++r)
        out.coboundary_basis.push_back(
            detail::cochain_from_vector(b_space.mat.row(r).transpose(), basis, degree, q));

    out.h_dim = static_cast<Eigen::Index>(out.cocycle_basis.size()) - b_space.rank();
    return out;
}

// Membership of theta in B^n_Q(X; Z_q).
inline bool is_coboundary(const Cochain& theta, const FiniteQuandle& x) {
    const std::vector<Tuple> basis = tuple_basis(x.size(), theta.degree, Theory::quandle);
    const MatI d_n = boundary_matrix<int>(x, theta.degree, Theory::quandle);
    const RrefModP b_space = rref_mod_p(d_n, theta.modulus);
    VecI v = detail::vector_from_cochain(theta, basis);
    return reduce_against(b_space, v, theta.modulus);
}

// A 3-cocycle of R_p over Z_p representing a nonzero cohomology class:
// the first solved basis cocycle that is not a coboundary, scaled so its
// first nonzero value (lexicographic tuple order) is 1.
inline Cochain select_distinguished_cocycle(int p, std::size_t basis_limit = kDefaultBasisLimit) {
    if (!is_prime(p) || p == 2)
        throw domain_error("select_distinguished_cocycle requires an odd prime p");
    const FiniteQuandle x = dihedral(p);
    detail::check_basis_limit(x, 4, basis_limit);

    const std::vector<Tuple> basis = tuple_basis(p, 3, Theory::quandle);
    const MatI d3 = boundary_matrix<int>(x, 3, Theory::quandle);
    const RrefModP b_space = rref_mod_p(d3, p);

    const CocycleSolution sol = solve_cocycles(x, p, 3, basis_limit);
    for (const Cochain& z : sol.cocycle_basis) {
        VecI v = detail::vector_from_cochain(z, basis);
        VecI residue = v;
        if (reduce_against(b_space, residue, p)) continue; // a coboundary
        // scale so the first nonzero value is 1
        int lead = 0;
        for (Eigen::Index i = 0; i < v.size(); ++i)
            if (v(i) != 0) {
                lead = v(i);
                break;
            }
        const int scale = inv_mod_p(lead, p);
        VecI scaled = v;
        for (Eigen::Index i = 0; i < scaled.size(); ++i)
            scaled(i) = mod_p(static_cast<long long>(scaled(i)) * scale, p);
        return detail::cochain_from_vector(scaled, basis, 3, p);
    }
    throw computation_error("no nontrivial 3-cocycle class found for R_" + std::to_string(p));
}

} // namespace qlab
