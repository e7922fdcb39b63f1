#pragma once

#include <utility>
#include <vector>

#include "piforms/exactnum/rational.hpp"

namespace piforms::hyperterm {

using exactnum::Int;
using exactnum::Rat;

class pole_error : public std::domain_error {
public:
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

// Shifted factorial (x)_n, three cases:
//   n > 0:  x (x+1) ... (x+n-1)
//   n = 0:  1
//   n < 0:  1 / ((x-1)(x-2)...(x+n)), pole when any factor vanishes
inline Rat pochhammer(const Rat& x, long n) {
    if (n == 0) return Rat(1);
    if (n > 0) {
        Rat r(1);
        for (long i = 0; i < n; ++i) r *= x + i;
        return r;
    }
    Rat r(1);
    for (long j = n; j < 0; ++j) {
        Rat f = x + j;
        if (f == 0) throw pole_error("pochhammer pole: zero factor at negative index");
        r *= f;
    }
    return exactnum::checked_div(Rat(1), r);
}

// (2k+1)!! = 1 * 3 * 5 * ... * (2k+1)
inline Int double_factorial_odd(long k) {
    if (k < 0) throw std::domain_error("double_factorial_odd of negative index");
    Int r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(2 * k + 1));
    return r;
}

// (k)! as a rational, with negative arguments treated as poles (the reciprocal
// of a factorial at a negative integer is zero only in limits we never take;
// a bare negative factorial in a numerator is an instantiation error).
inline Rat factorial_checked(long n) {
    if (n < 0) throw pole_error("factorial of negative integer");
    return Rat(exactnum::factorial(static_cast<unsigned long>(n)));
}

// prod Gamma(x_i + m_i) / Gamma(x_i) = prod (x_i)_{m_i}, evaluated exactly.
inline Rat gamma_quotient_reduce(const std::vector<std::pair<Rat, long>>& pairs) {
    Rat r(1);
    for (const auto& [x, m] : pairs) r *= pochhammer(x, m);
    return r;
}

}  // namespace piforms::hyperterm
