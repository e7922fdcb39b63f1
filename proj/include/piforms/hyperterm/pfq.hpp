#pragma once

#include <optional>
#include <vector>

#include "piforms/hyperterm/pochhammer.hpp"

namespace piforms::hyperterm {

// Exact sum of a terminating pFq: some numerator parameter must be a
// non-positive integer -s; the series then stops at k = s. The smallest such
// s wins. Denominator parameters must not hit zero before termination.
inline Rat pfq_terminating(const std::vector<Rat>& num_params,
                           const std::vector<Rat>& den_params, const Rat& z) {
    std::optional<long> stop;
    for (const auto& a : num_params) {
        if (a.get_den() == 1 && a <= 0) {
            long s = -static_cast<long>(a.get_num().get_si());
            if (!stop || s < *stop) stop = s;
        }
    }
    if (!stop) throw std::invalid_argument("pfq_terminating: no non-positive integer numerator parameter");
    long K = *stop;
    for (const auto& b : den_params) {
        // factor b+j appears in (b)_k for j <= K-1
        if (b.get_den() == 1 && b <= 0 && -b.get_num().get_si() <= K - 1)
            throw pole_error("pfq_terminating: denominator parameter pole before termination");
    }
    Rat sum(0), t(1);
    for (long k = 0; k <= K; ++k) {
        sum += t;
        if (k == K) break;
        Rat next = t * z;
        for (const auto& a : num_params) next *= a + k;
        for (const auto& b : den_params) next = exactnum::checked_div(next, b + k);
        t = exactnum::checked_div(next, Rat(k + 1));
    }
    return sum;
}

}  // namespace piforms::hyperterm
