// Exact arithmetic in Z[t,t^-1]/(t^p - 1) and the closed-form cocycle
// invariants of the twist-spun torus-knot doubles F_{p,1}, F_{p,2}: Gauss-sum
// polynomials, their products, constant terms, and the constant-term
// distinguisher for connected-sum words F_I.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlab/bigint.hpp"
#include "qlab/errors.hpp"
#include "qlab/modp.hpp"

namespace qlab {

// An element of Z[t]/(t^p - 1); coeffs[i] is the coefficient of t^i.
struct CyclicPoly {
    int modulus_p = 0;
    std::vector<BigInt> coeffs;

    static CyclicPoly zero(int p) {
        return CyclicPoly{p, std::vector<BigInt>(static_cast<std::size_t>(p), BigInt(0))};
    }

    CyclicPoly operator+(const CyclicPoly& other) const {
        require_same(other);
        CyclicPoly out = *this;
        for (int i = 0; i < modulus_p; ++i)
            out.coeffs[static_cast<std::size_t>(i)] += other.coeffs[static_cast<std::size_t>(i)];
        return out;
    }

    CyclicPoly operator*(const CyclicPoly& other) const {
        require_same(other);
        CyclicPoly out = zero(modulus_p);
        for (int i = 0; i < modulus_p; ++i) {
            if (coeffs[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < modulus_p; ++j)
                out.coeffs[static_cast<std::size_t>((i + j) % modulus_p)] +=
                    coeffs[static_cast<std::size_t>(i)] * other.coeffs[static_cast<std::size_t>(j)];
        }
        return out;
    }

    CyclicPoly scaled(const BigInt& k) const {
        CyclicPoly out = *this;
        for (auto& c : out.coeffs) c *= k;
        return out;
    }

    // t -> t^{-1}
    CyclicPoly mirrored() const {
        CyclicPoly out = zero(modulus_p);
        for (int i = 0; i < modulus_p; ++i)
            out.coeffs[static_cast<std::size_t>((modulus_p - i) % modulus_p)] =
                coeffs[static_cast<std::size_t>(i)];
        return out;
    }

    BigInt mass() const {
        BigInt m = 0;
        for (const auto& c : coeffs) m += c;
        return m;
    }

    bool operator==(const CyclicPoly& other) const {
        return modulus_p == other.modulus_p && coeffs == other.coeffs;
    }

private:
    void require_same(const CyclicPoly& other) const {
        if (modulus_p != other.modulus_p)
            throw domain_error("cyclic polynomial modulus mismatch");
    }
};

inline bool is_odd_prime(int p) { return p > 2 && is_prime(p); }

// sum_{k=0}^{p-1} t^(sign * 2k^2 mod p)
inline CyclicPoly gauss_sum_poly(int p, int sign) {
    if (!is_odd_prime(p)) throw domain_error("gauss_sum_poly requires an odd prime p");
    if (sign != 1 && sign != -1) throw domain_error("gauss_sum_poly sign must be +1 or -1");
    CyclicPoly out = CyclicPoly::zero(p);
    for (int k = 0; k < p; ++k) {
        const long long e = 2LL * k * k * sign;
        out.coeffs[static_cast<std::size_t>(mod_p(e, p))] += 1;
    }
    return out;
}

// variant 1: p * (sum t^{2k^2})^2        -- the double of the twist-spun knot
// variant 2: p * (sum t^{2k^2}) * (sum t^{-2k^2})
inline CyclicPoly phi_closed_form(int p, int variant) {
    if (variant != 1 && variant != 2) throw domain_error("phi_closed_form variant must be 1 or 2");
    const CyclicPoly plus = gauss_sum_poly(p, +1);
    const CyclicPoly other = variant == 1 ? plus : gauss_sum_poly(p, -1);
    return (plus * other).scaled(p);
}

// Coefficient of t^0; exponents are reduced mod p on construction, so this
// is the sum over exponents congruent to 0.
inline BigInt constant_term(const CyclicPoly& v) {
    if (v.coeffs.empty()) return 0;
    return v.coeffs[0];
}

struct Prop31Report {
    int p = 0;
    std::int64_t pairs_sum_zero = 0;  // #{(i,j) : 2(i^2+j^2) = 0 mod p}
    std::int64_t pairs_diff_zero = 0; // #{(i,j) : 2(i^2-j^2) = 0 mod p}
    BigInt constant_term_1;
    BigInt constant_term_2;
    bool pass = false;
};

// Brute-force pair counting behind the constant terms of the two closed
// forms: for p = 3 mod 4 the counts must be 1 and 2p-1, matching constant
// terms p and p(2p-1).
inline Prop31Report verify_prop31(int p) {
    if (!is_odd_prime(p) || p % 4 != 3)
        throw domain_error("verify_prop31 requires an odd prime p with p = 3 (mod 4)");
    Prop31Report r;
    r.p = p;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            if (mod_p(2LL * (1LL * i * i + 1LL * j * j), p) == 0) ++r.pairs_sum_zero;
            if (mod_p(2LL * (1LL * i * i - 1LL * j * j), p) == 0) ++r.pairs_diff_zero;
        }
    r.constant_term_1 = constant_term(phi_closed_form(p, 1));
    r.constant_term_2 = constant_term(phi_closed_form(p, 2));
    r.pass = r.pairs_sum_zero == 1 && r.pairs_diff_zero == 2 * p - 1 &&
             r.constant_term_1 == p * r.pairs_sum_zero &&
             r.constant_term_2 == p * r.pairs_diff_zero;
    return r;
}

// A connected-sum word F_I = F_{p_1,e_1} # ... # F_{p_n,e_n}, optionally
// mirrored with reversed orientation, plus trivial genus-g handles (which do
// not affect the invariant and are recorded for display only).
struct SurfaceKnotLabel {
    std::vector<int> primes;
    std::vector<int> exponents; // each 1 or 2
    bool mirrored = false;
    int genus = 0;

    void validate() const {
        if (primes.size() != exponents.size())
            throw domain_error("label: primes and exponents differ in length");
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (!is_odd_prime(primes[i]))
                throw domain_error("label: " + std::to_string(primes[i]) + " is not an odd prime");
            for (std::size_t j = i + 1; j < primes.size(); ++j)
                if (primes[i] == primes[j])
                    throw domain_error("label: primes must be pairwise distinct");
            if (exponents[i] != 1 && exponents[i] != 2)
                throw domain_error("label: exponents must be 1 or 2");
        }
        if (genus < 0) throw domain_error("label: genus must be >= 0");
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (!s.empty()) s += " # ";
            s += "F[" + std::to_string(primes[i]) + "," + std::to_string(exponents[i]) + "]";
        }
        if (s.empty()) s = "trivial";
        if (genus > 0) s += " # Sigma" + std::to_string(genus);
        if (mirrored) s = "-(" + s + ")*";
        return s;
    }
};

// Phi_{p_j}(F_I) = Phi_{p_j}(F_{p_j,e_j}); connected summands at other
// primes contribute nothing at p_j, and a mirror mark applies t -> t^{-1}.
// j is 1-based.
inline CyclicPoly phi_FI(const SurfaceKnotLabel& label, std::size_t j) {
    label.validate();
    if (j < 1 || j > label.primes.size())
        throw domain_error("phi_FI: index j out of range");
    const CyclicPoly v = phi_closed_form(label.primes[j - 1], label.exponents[j - 1]);
    return label.mirrored ? v.mirrored() : v;
}

struct DistinguishVerdict {
    std::size_t j = 0; // 1-based position where the exponent words differ
    int p = 0;
    BigInt constant_term_I;
    BigInt constant_term_Iprime;
    bool distinguished = false;
    std::string verdict;
};

// Finds the first j with e_j != e'_j and certifies that Phi_{p_j} separates
// F_I from both F_{I'} and its reversed mirror: the constant terms p and
// p(2p-1) differ and are fixed by the mirror involution.
inline DistinguishVerdict distinguish_pair(const std::vector<int>& exponents_I,
                                           const std::vector<int>& exponents_Iprime,
                                           const std::vector<int>& primes) {
    SurfaceKnotLabel a{primes, exponents_I, false, 0};
    SurfaceKnotLabel b{primes, exponents_Iprime, false, 0};
    a.validate();
    b.validate();
    if (exponents_I == exponents_Iprime)
        throw domain_error("distinguish_pair requires distinct exponent words");

    std::size_t j = 0;
    while (exponents_I[j] == exponents_Iprime[j]) ++j;
    const int p = primes[j];
    if (p % 4 != 3)
        throw domain_error("distinguish_pair: the separating prime must satisfy p = 3 (mod 4)");

    const CyclicPoly phi_I = phi_FI(a, j + 1);
    const CyclicPoly phi_Ip = phi_FI(b, j + 1);
    const CyclicPoly phi_Ip_mirror = phi_Ip.mirrored();

    DistinguishVerdict v;
    v.j = j + 1;
    v.p = p;
    v.constant_term_I = constant_term(phi_I);
    v.constant_term_Iprime = constant_term(phi_Ip);
    v.distinguished = !(phi_I == phi_Ip) && !(phi_I == phi_Ip_mirror) &&
                      v.constant_term_I != v.constant_term_Iprime;
    v.verdict = v.distinguished ? "condition (ii') fails" : "not distinguished";
    return v;
}

} // namespace qlab
