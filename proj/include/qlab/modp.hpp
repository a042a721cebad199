// Linear algebra over the prime field F_p: reduced row echelon form, rank,
// nullspace, and row-span membership. Entries are ints in 0..p-1.
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qlab/errors.hpp"

namespace qlab {

using MatI = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
using VecI = Eigen::Matrix<int, Eigen::Dynamic, 1>;

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline int mod_p(long long v, int p) { return static_cast<int>(((v % p) + p) % p); }

inline int inv_mod_p(int a, int p) {
    // Fermat; p is prime and a != 0 mod p.
    int result = 1;
    long long base = mod_p(a, p);
    int e = p - 2;
    while (e > 0) {
        if (e & 1) result = mod_p(result * base, p);
        base = mod_p(base * base, p);
        e >>= 1;
    }
    return result;
}

struct RrefModP {
    MatI mat;                    // RREF, zero rows trimmed
    std::vector<Eigen::Index> pivot_cols;
    int p = 0;

    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_cols.size()); }
};

// Gauss-Jordan elimination with the first nonzero entry of each column as
// pivot; fully deterministic.
inline RrefModP rref_mod_p(MatI m, int p) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = mod_p(m(i, j), p);

    RrefModP out;
    out.p = p;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (m(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r) m.row(pivot).swap(m.row(r));
        const int inv = inv_mod_p(m(r, c), p);
        for (Eigen::Index j = c; j < cols; ++j) m(r, j) = mod_p(static_cast<long long>(m(r, j)) * inv, p);
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const int f = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j)
                m(i, j) = mod_p(m(i, j) - static_cast<long long>(f) * m(r, j), p);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.mat = m.topRows(r);
    return out;
}

inline Eigen::Index rank_mod_p(const MatI& m, int p) { return rref_mod_p(m, p).rank(); }

// Reduces v against the RREF rows in place; returns true iff the residue is
// zero, i.e. v lies in the row span.
inline bool reduce_against(const RrefModP& rref, VecI& v, int p) {
    for (Eigen::Index r = 0; r < rref.rank(); ++r) {
        const Eigen::Index c = rref.pivot_cols[static_cast<std::size_t>(r)];
        const int f = mod_p(v(c), p);
        if (f == 0) continue;
        for (Eigen::Index j = 0; j < v.size(); ++j)
            v(j) = mod_p(v(j) - static_cast<long long>(f) * rref.mat(r, j), p);
    }
    for (Eigen::Index j = 0; j < v.size(); ++j)
        if (mod_p(v(j), p) != 0) return false;
    return true;
}

// Nullspace basis in the standard deterministic form: one vector per free
// column (in increasing column order), unit at the free column.
inline std::vector<VecI> nullspace_mod_p(const MatI& m, int p) {
    const Eigen::Index cols = m.cols();
    const RrefModP rref = rref_mod_p(m, p);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Eigen::Index c : rref.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<VecI> basis;
    for (Eigen::Index f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        VecI v = VecI::Zero(cols);
        v(f) = 1;
        for (Eigen::Index r = 0; r < rref.rank(); ++r) {
            const Eigen::Index c = rref.pivot_cols[static_cast<std::size_t>(r)];
            v(c) = mod_p(-rref.mat(r, f), p);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace qlab
