// The boundary map of the rack chain complex,
//   d_n(x_1..x_n) = (-1)^(n-1) * sum_i (-1)^i [ drop_i - drop_i with *x_i ],
// its quandle-theory variant (post-projection of degenerate tuples), and
// boundary matrices in the lexicographic tuple basis.
#pragma once

#include <Eigen/Dense>

#include "qlab/chain.hpp"
#include "qlab/quandle.hpp"

namespace qlab {

namespace detail {

// d_n of a single tuple, rack theory, appended into `out`.
inline void boundary_of_tuple(const Tuple& t, const FiniteQuandle& x, IntChain& out,
                              std::int64_t coeff) {
    const int n = static_cast<int>(t.size());
    if (n <= 1) return;
    const std::int64_t global = (n % 2 == 0) ? -1 : 1; // (-1)^(n-1)
    Tuple face(static_cast<std::size_t>(n - 1));
    for (int i = 1; i <= n; ++i) {
        const std::int64_t sign = global * ((i % 2 == 0) ? 1 : -1) * coeff;
        // (x_1, ..., x_{i-1}, x_{i+1}, ..., x_n)
        int k = 0;
        for (int j = 1; j <= n; ++j)
            if (j != i) face[k++] = t[static_cast<std::size_t>(j - 1)];
        out.add(face, sign);
        // (x_1*x_i, ..., x_{i-1}*x_i, x_{i+1}, ..., x_n)
        const int xi = t[static_cast<std::size_t>(i - 1)];
        for (int j = 0; j < i - 1; ++j)
            face[static_cast<std::size_t>(j)] = x.op(t[static_cast<std::size_t>(j)], xi);
        out.add(face, -sign);
    }
}

} // namespace detail

// Boundary of a chain. For the quandle theory the input is taken modulo
// degenerate tuples and the result is projected the same way.
inline IntChain boundary(const IntChain& chain, const FiniteQuandle& x, Theory theory) {
    if (chain.degree < 1) throw domain_error("boundary requires degree >= 1");
    check_chain_entries(chain, x);
    IntChain out = IntChain::zero(chain.degree - 1);
    for (const auto& [t, c] : chain.terms) {
        if (theory == Theory::quandle && is_degenerate(t)) continue;
        detail::boundary_of_tuple(t, x, out, c);
    }
    return theory == Theory::quandle ? project_quandle(out) : out;
}

// Matrix of d_n: rows indexed by the degree-(n-1) basis, columns by the
// degree-n basis, both lexicographic. d_1 has zero rows (C_0 = 0).
template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
boundary_matrix(const FiniteQuandle& x, int degree, Theory theory) {
    if (degree < 1) throw domain_error("boundary_matrix requires degree >= 1");
    const std::vector<Tuple> cols = tuple_basis(x.size(), degree, theory);
    const std::vector<Tuple> rows = tuple_basis(x.size(), degree - 1, theory);
    std::map<Tuple, Eigen::Index> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], static_cast<Eigen::Index>(i));

    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(
        static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    m.setZero();
    for (std::size_t j = 0; j < cols.size(); ++j) {
        IntChain image = IntChain::zero(degree - 1);
        detail::boundary_of_tuple(cols[j], x, image, 1);
        for (const auto& [t, c] : image.terms) {
            if (theory == Theory::quandle && is_degenerate(t)) continue;
            m(row_index.at(t), static_cast<Eigen::Index>(j)) = static_cast<Scalar>(c);
        }
    }
    return m;
}

} // namespace qlab
