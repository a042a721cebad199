#include <iostream>
#include "qlab/closed_forms.hpp"
using namespace qlab;
int main() {
    for (int p : {3, 7, 11, 19, 23}) {
        auto v1 = phi_closed_form(p, 1), v2 = phi_closed_form(p, 2);
        std::cout << "p=" << p << " v1 palindromic=" << (v1 == v1.mirrored())
                  << " v2 palindromic=" << (v2 == v2.mirrored())
                  << " ct1=" << constant_term(v1) << " ct2=" << constant_term(v2) << "\n";
    }
    for (int p : {5, 13, 17}) {
        long long count = 0;
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j)
                if ((2 * (i * i + j * j)) % p == 0) ++count;
        std::cout << "p=" << p << " (1 mod 4): sum-zero pairs " << count << "\n";
    }
    auto r = verify_prop31(11);
    std::cout << "p=11 counts " << r.pairs_sum_zero << " " << r.pairs_diff_zero << " pass=" << r.pass << "\n";
    return 0;
}
