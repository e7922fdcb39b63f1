#pragma once

#include "piforms/exactnum/fixed_real.hpp"
#include "piforms/exactnum/rational.hpp"

namespace piforms::exactnum {

class oracle_error : public std::runtime_error {
public:
    explicit oracle_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Exact-rational partial sum of arctan(1/x) = sum (-1)^i / ((2i+1) x^(2i+1)),
// truncated once the geometric tail bound drops below 10^(-prec-2).
// Returns the partial sum and a rigorous bound on the dropped tail.
inline std::pair<Rat, Rat> arctan_inv_series(long x, long prec) {
    Rat sum(0);
    Int xi(x);
    Int x2 = xi * xi;
    Int den_pow = xi;          // x^(2i+1)
    Rat tail_cut = rat(1, pow10(static_cast<unsigned long>(prec) + 2));
    long i = 0;
    for (;;) {
        Rat term = rat(1, Int((2 * i + 1)) * den_pow);
        sum += (i % 2 == 0) ? term : -term;
        den_pow *= x2;
        ++i;
        // alternating series: dropped tail is below the next term
        Rat bound = rat(1, Int((2 * i + 1)) * den_pow);
        if (bound < tail_cut) return {sum, bound};
    }
}

inline FixedReal arctan_inv(long x, long prec) {
    auto [sum, tail] = arctan_inv_series(x, prec);
    return fixed_from_bounded(sum, tail, prec);
}

}  // namespace detail

// pi to `precision` digits, cross-checked between two independent arctan
// decompositions:
//   Machin:  pi = 16 atan(1/5) - 4 atan(1/239)
//   Euler:   pi = 4 (atan(1/2) + atan(1/3))
// The two fixed-point results must agree to the requested precision; a
// disagreement means an internal arithmetic bug and aborts the computation.
inline FixedReal pi_reference(long precision) {
    if (precision < 1) throw std::invalid_argument("precision must be >= 1");
    long inner = precision + guard_digits(precision);
    FixedReal machin = detail::arctan_inv(5, inner).mul_int(16) -
                       detail::arctan_inv(239, inner).mul_int(4);
    FixedReal euler = (detail::arctan_inv(2, inner) + detail::arctan_inv(3, inner)).mul_int(4);
    Rat tol = rat(1, pow10(precision));
    if (!machin.agrees_with(euler, tol))
        throw oracle_error("pi oracle disagreement between arctan formulas");
    return machin.round_to(precision);
}

// ln 2 = 2 atanh(1/3) = 2 sum 1/((2i+1) 3^(2i+1)); independent of the pi
// oracle, used by the alternating-acceleration self test.
inline FixedReal ln2_reference(long precision) {
    if (precision < 1) throw std::invalid_argument("precision must be >= 1");
    long inner = precision + guard_digits(precision);
    Rat sum(0);
    Int pw(3);
    Rat cut = rat(1, pow10(static_cast<unsigned long>(inner) + 2));
    long i = 0;
    for (;;) {
        sum += rat(1, Int(2 * i + 1) * pw);
        pw *= 9;
        ++i;
        // monotone series with ratio < 1/9: tail < next term * 9/8
        Rat bound = rat(9, Int(8) * Int(2 * i + 1) * pw);
        if (bound < cut) {
            return fixed_from_bounded(sum * 2, bound * 2, inner).round_to(precision);
        }
    }
}

}  // namespace piforms::exactnum
