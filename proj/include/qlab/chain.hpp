// Chains and cochains over a finite quandle: formal integer combinations of
// n-tuples, and Z_q-valued functions on them (quandle theory: degenerate
// tuples, having equal consecutive entries, are projected to zero).
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qlab/errors.hpp"
#include "qlab/quandle.hpp"

namespace qlab {

using Tuple = std::vector<int>;

enum class Theory { rack, quandle };

inline bool is_degenerate(const Tuple& t) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1]) return true;
    return false;
}

// All degree-n tuples over {0..size-1} in lexicographic order; for the
// quandle theory only the non-degenerate ones (the basis of C^Q_n).
inline std::vector<Tuple> tuple_basis(int size, int degree, Theory theory) {
    std::vector<Tuple> basis;
    if (degree <= 0) return basis;
    Tuple t(static_cast<std::size_t>(degree), 0);
    while (true) {
        if (theory == Theory::rack || !is_degenerate(t)) basis.push_back(t);
        int i = degree - 1;
        while (i >= 0 && t[i] == size - 1) t[i--] = 0;
        if (i < 0) break;
        ++t[i];
    }
    return basis;
}

// A formal integer combination of degree-n tuples. Zero coefficients are
// never stored; std::map keeps term order lexicographic and deterministic.
struct IntChain {
    int degree = 0;
    std::map<Tuple, std::int64_t> terms;

    static IntChain zero(int degree) { return IntChain{degree, {}}; }

    void add(const Tuple& t, std::int64_t c) {
        if (c == 0) return;
        auto it = terms.find(t);
        if (it == terms.end()) {
            terms.emplace(t, c);
        } else if ((it->second += c) == 0) {
            terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }

    IntChain& operator+=(const IntChain& other) {
        if (degree != other.degree) throw domain_error("chain degree mismatch");
        for (const auto& [t, c] : other.terms) add(t, c);
        return *this;
    }

    IntChain operator-() const {
        IntChain out{degree, terms};
        for (auto& [t, c] : out.terms) c = -c;
        return out;
    }
};

// Drops degenerate tuples: the projection C^R_n -> C^Q_n.
inline IntChain project_quandle(const IntChain& chain) {
    IntChain out = IntChain::zero(chain.degree);
    for (const auto& [t, c] : chain.terms)
        if (!is_degenerate(t)) out.add(t, c);
    return out;
}

inline void check_chain_entries(const IntChain& chain, const FiniteQuandle& x) {
    for (const auto& [t, c] : chain.terms) {
        if (static_cast<int>(t.size()) != chain.degree)
            throw structural_error("chain term of wrong length");
        for (int v : t)
            if (v < 0 || v >= x.size())
                throw domain_error("chain tuple entry outside the quandle");
    }
}

// A Z_q-valued cochain of the quandle theory: values on non-degenerate
// tuples, reduced to 0..q-1, zeros absent. Values on degenerate tuples are
// identically zero and may not be set.
struct Cochain {
    int degree = 0;
    int modulus = 0;
    std::map<Tuple, int> values;

    static Cochain zero(int degree, int modulus) { return Cochain{degree, modulus, {}}; }

    int operator()(const Tuple& t) const {
        auto it = values.find(t);
        return it == values.end() ? 0 : it->second;
    }

    void set(const Tuple& t, int v) {
        if (static_cast<int>(t.size()) != degree)
            throw domain_error("cochain tuple of wrong length");
        v = ((v % modulus) + modulus) % modulus;
        if (v != 0 && is_degenerate(t))
            throw domain_error("quandle cochains vanish on degenerate tuples");
        if (v == 0)
            values.erase(t);
        else
            values[t] = v;
    }

    Cochain operator+(const Cochain& other) const {
        if (degree != other.degree || modulus != other.modulus)
            throw domain_error("cochain degree/modulus mismatch");
        Cochain out = *this;
        for (const auto& [t, v] : other.values) out.set(t, out(t) + v);
        return out;
    }

    bool operator==(const Cochain& other) const {
        return degree == other.degree && modulus == other.modulus && values == other.values;
    }
};

// Kronecker pairing <z, theta> = sum of coefficient * theta(tuple), mod q.
inline int kronecker(const IntChain& z, const Cochain& theta) {
    if (z.degree != theta.degree)
        throw domain_error("kronecker: chain and cochain degrees differ");
    const int q = theta.modulus;
    std::int64_t acc = 0;
    for (const auto& [t, c] : z.terms)
        acc += (c % q) * theta(t);
    return static_cast<int>(((acc % q) + q) % q);
}

} // namespace qlab
