// Finite quandles: operation tables, axiom checking, standard constructions.
#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qlab/errors.hpp"

namespace qlab {

using Table = std::vector<std::vector<int>>;

// Result of checking the quandle axioms on an operation table.
// axiom == 0 means all of Q1, Q2, Q3 hold; otherwise axiom names the first
// violated axiom (checked in order Q1, Q2, Q3) and witness holds the
// offending elements: Q1 -> {a}, Q2 -> {a, a', b} with a*b == a'*b,
// Q3 -> {a, b, c}.
struct AxiomReport {
    int axiom = 0;
    std::vector<int> witness;

    bool pass() const { return axiom == 0; }

    std::string message() const {
        if (pass()) return "pass";
        std::string m = "fail Q" + std::to_string(axiom) + " witness";
        const char* names[] = {"a", "b", "c"};
        for (std::size_t i = 0; i < witness.size(); ++i)
            m += std::string(" ") + names[i] + "=" + std::to_string(witness[i]);
        return m;
    }
};

// Structural validation only: square shape and entries in range.
inline void validate_table_shape(const Table& table) {
    const std::size_t n = table.size();
    if (n == 0) throw structural_error("operation table is empty");
    for (const auto& row : table) {
        if (row.size() != n)
            throw structural_error("operation table is not square");
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw structural_error("operation table entry out of range");
    }
}

// Checks Q1 (idempotence), Q2 (right translations are bijections) and
// Q3 (right self-distributivity) on a structurally valid table.
inline AxiomReport check_axioms(const Table& table) {
    validate_table_shape(table);
    const int n = static_cast<int>(table.size());

    for (int a = 0; a < n; ++a)
        if (table[a][a] != a) return {1, {a}};

    for (int b = 0; b < n; ++b) {
        std::vector<int> seen(n, -1);
        for (int a = 0; a < n; ++a) {
            const int ab = table[a][b];
            if (seen[ab] >= 0) return {2, {seen[ab], a, b}};
            seen[ab] = a;
        }
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[table[a][c]][table[b][c]])
                    return {3, {a, b, c}};

    return {};
}

// A finite quandle on elements {0..n-1}. The table is validated at
// construction, so every live FiniteQuandle satisfies Q1-Q3.
class FiniteQuandle {
public:
    FiniteQuandle(std::string label, const Table& table) : label_(std::move(label)) {
        const AxiomReport report = check_axioms(table);
        if (!report.pass())
            throw domain_error("not a quandle: " + report.message());
        n_ = static_cast<int>(table.size());
        table_.reserve(static_cast<std::size_t>(n_) * n_);
        for (const auto& row : table)
            table_.insert(table_.end(), row.begin(), row.end());
    }

    int size() const { return n_; }
    const std::string& label() const { return label_; }

    // a * b
    int op(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }

    Table table() const {
        Table t(n_, std::vector<int>(n_));
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) t[a][b] = op(a, b);
        return t;
    }

private:
    std::string label_;
    int n_ = 0;
    std::vector<int> table_;
};

// Dihedral quandle R_p on {0..p-1} with a*b = (2b - a) mod p. Only odd p is
// admitted here; even p would still satisfy the axioms but is not used.
inline FiniteQuandle dihedral(int p) {
    if (p <= 0 || p % 2 == 0)
        throw domain_error("dihedral quandle requires a positive odd p, got " + std::to_string(p));
    Table t(p, std::vector<int>(p));
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) t[a][b] = ((2 * b - a) % p + p) % p;
    return FiniteQuandle("R" + std::to_string(p), t);
}

// Trivial quandle: a*b = a for all a, b.
inline FiniteQuandle trivial_quandle(int n) {
    if (n <= 0) throw domain_error("trivial quandle requires n >= 1");
    Table t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = a;
    return FiniteQuandle("T" + std::to_string(n), t);
}

} // namespace qlab
