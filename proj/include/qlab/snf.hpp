// Smith normal form over the integers, with arbitrary-precision entries.
// Pivot selection always takes a smallest nonzero entry of the remaining
// submatrix to limit coefficient growth.
#pragma once

#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include "qlab/bigint.hpp"
#include "qlab/errors.hpp"

namespace qlab {

using MatZ = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

struct SmithNormalForm {
    std::vector<BigInt> invariant_factors; // the nonzero diagonal, d_1 | d_2 | ...
    Eigen::Index rank = 0;                 // == invariant_factors.size()
};

// Diagonalizes M by row/column operations and normalizes the diagonal into
// an invariant-factor chain. M is consumed.
inline SmithNormalForm smith_normal_form(MatZ m) {
    using std::swap;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    std::vector<BigInt> diag;

    Eigen::Index r = 0;
    while (r < rows && r < cols) {
        // smallest nonzero entry of the submatrix [r.., r..]
        Eigen::Index pi = -1, pj = -1;
        BigInt best;
        for (Eigen::Index i = r; i < rows; ++i)
            for (Eigen::Index j = r; j < cols; ++j) {
                if (m(i, j) == 0) continue;
                BigInt a = abs(m(i, j));
                if (pi < 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break; // submatrix is zero

        if (pi != r) m.row(pi).swap(m.row(r));
        if (pj != r) m.col(pj).swap(m.col(r));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (Eigen::Index i = r + 1; i < rows; ++i) {
                if (m(i, r) == 0) continue;
                const BigInt q = m(i, r) / m(r, r);
                m.row(i) -= q * m.row(r);
                if (m(i, r) != 0) { // remainder is strictly smaller, promote it
                    m.row(i).swap(m.row(r));
                    clean = false;
                }
            }
            for (Eigen::Index j = r + 1; j < cols; ++j) {
                if (m(r, j) == 0) continue;
                const BigInt q = m(r, j) / m(r, r);
                m.col(j) -= q * m.col(r);
                if (m(r, j) != 0) {
                    m.col(j).swap(m.col(r));
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide the rest of the submatrix before we advance
            for (Eigen::Index i = r + 1; i < rows && clean; ++i)
                for (Eigen::Index j = r + 1; j < cols && clean; ++j)
                    if (m(i, j) % m(r, r) != 0) {
                        m.row(r) += m.row(i);
                        clean = false;
                    }
        }
        diag.push_back(abs(m(r, r)));
        ++r;
    }

    // Normalize the diagonal into a divisibility chain.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            if (diag[i + 1] % diag[i] == 0) continue;
            const BigInt g = gcd(diag[i], diag[i + 1]);
            const BigInt l = diag[i] / g * diag[i + 1];
            diag[i] = g;
            diag[i + 1] = l;
            changed = true;
        }
    }

    SmithNormalForm out;
    out.invariant_factors = std::move(diag);
    out.rank = static_cast<Eigen::Index>(out.invariant_factors.size());
    return out;
}

} // namespace qlab
