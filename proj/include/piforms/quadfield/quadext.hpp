#pragma once

#include "piforms/exactnum/fixed_real.hpp"
#include "piforms/exactnum/rational.hpp"

namespace piforms::quadfield {

using exactnum::FixedReal;
using exactnum::Int;
using exactnum::Rat;

// Element a + b sqrt2 + c sqrt3 + d sqrt6 of Q(sqrt2, sqrt3). The basis
// {1, sqrt2, sqrt3, sqrt6} is linearly independent over Q, so equality and
// the zero test are coefficient-wise and exact.
struct QuadExt {
    Rat a, b, c, d;

    QuadExt() : a(0), b(0), c(0), d(0) {}
    QuadExt(Rat a_, Rat b_, Rat c_, Rat d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static QuadExt rational(const Rat& r) { return {r, 0, 0, 0}; }
    static QuadExt sqrt2(const Rat& coeff = 1) { return {0, coeff, 0, 0}; }
    static QuadExt sqrt3(const Rat& coeff = 1) { return {0, 0, coeff, 0}; }
    static QuadExt sqrt6(const Rat& coeff = 1) { return {0, 0, 0, coeff}; }

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    bool is_rational() const { return b == 0 && c == 0 && d == 0; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    QuadExt operator-() const { return {-a, -b, -c, -d}; }

    // closure: sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3, sqrt3*sqrt6 = 3 sqrt2
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        return {x.a * y.a + 2 * x.b * y.b + 3 * x.c * y.c + 6 * x.d * y.d,
                x.a * y.b + x.b * y.a + 3 * (x.c * y.d + x.d * y.c),
                x.a * y.c + x.c * y.a + 2 * (x.b * y.d + x.d * y.b),
                x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b};
    }

    QuadExt conj_sqrt2() const { return {a, -b, c, -d}; }  // sqrt2 -> -sqrt2
    QuadExt conj_sqrt3() const { return {a, b, -c, -d}; }  // sqrt3 -> -sqrt3

    // Inverse by successive conjugation: x * conj2(x) lies in Q(sqrt3), and
    // multiplying by its sqrt3-conjugate gives a nonzero rational norm.
    QuadExt inverse() const {
        if (is_zero()) throw exactnum::zero_division_error("inverse of zero QuadExt");
        QuadExt c2 = conj_sqrt2();
        QuadExt y = *this * c2;           // in Q(sqrt3): b = d = 0
        QuadExt y3 = y.conj_sqrt3();
        QuadExt norm = y * y3;            // rational
        Rat n = norm.a;
        if (!norm.is_rational() || n == 0)
            throw std::logic_error("QuadExt norm not rational and nonzero");
        QuadExt num = c2 * y3;
        Rat inv = exactnum::checked_div(Rat(1), n);
        return {num.a * inv, num.b * inv, num.c * inv, num.d * inv};
    }

    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        return x * y.inverse();
    }
};

inline QuadExt operator*(const Rat& r, const QuadExt& x) {
    return {r * x.a, r * x.b, r * x.c, r * x.d};
}

// Numeric embedding into FixedReal; sqrt values carry their own ulp bounds,
// so the result's err_ulp is a rigorous bound.
inline FixedReal quad_embed(const QuadExt& x, long precision) {
    long inner = precision + exactnum::guard_digits(8);
    FixedReal acc = FixedReal::from_rational(x.a, inner);
    auto addpart = [&](const Rat& coeff, long radicand) {
        if (coeff == 0) return;
        FixedReal root = exactnum::fixed_sqrt(Int(radicand), inner);
        acc = acc + FixedReal::from_rational(coeff, inner) * root;
    };
    addpart(x.b, 2);
    addpart(x.c, 3);
    addpart(x.d, 6);
    return acc.round_to(precision);
}

// coeff * pi^pi_power; pi_power 0 appears only in exact identity checks.
struct ClosedFormConstant {
    QuadExt coeff;
    int pi_power = 0;
};

}  // namespace piforms::quadfield
