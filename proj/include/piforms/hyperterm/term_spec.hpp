#pragma once

#include <string>
#include <vector>

#include "piforms/hyperterm/pochhammer.hpp"
#include "piforms/quadfield/quadext.hpp"

namespace piforms::hyperterm {

// (base)_{k+offset}
struct PochFactor {
    Rat base;
    long offset = 0;
};

// (k+offset)!
struct FactFactor {
    long offset = 0;
};

// slope*k + intercept
struct LinearPoly {
    long slope = 0;
    Rat intercept;
};

// Normal form for a series summand:
//   term(k) = scale * z^k * prod(poly_num)/prod(poly_den)
//             * prod (base)_{k+off} [num/den] * prod (k+off)! [num/den]
// The k coefficient inside every Pochhammer and factorial index is 1; the
// geometric knob z carries any (-1)^k as its sign.
struct TermSpec {
    std::vector<PochFactor> poch_num, poch_den;
    std::vector<FactFactor> fact_num, fact_den;
    std::vector<LinearPoly> poly_num, poly_den;
    Rat geo_base = Rat(1);
    Rat scale = Rat(1);
    long start_index = 0;
};

inline Rat term_value(const TermSpec& t, long k) {
    if (k < t.start_index) throw std::invalid_argument("term index below start");
    Rat v = t.scale * exactnum::rat_pow(t.geo_base, k);
    for (const auto& f : t.poch_num) v *= pochhammer(f.base, k + f.offset);
    for (const auto& f : t.poch_den) {
        Rat d = pochhammer(f.base, k + f.offset);
        if (d == 0) throw pole_error("zero Pochhammer in term denominator");
        v /= d;
    }
    for (const auto& f : t.fact_num) v *= factorial_checked(k + f.offset);
    for (const auto& f : t.fact_den) v /= factorial_checked(k + f.offset);
    for (const auto& p : t.poly_num) v *= p.slope * k + p.intercept;
    for (const auto& p : t.poly_den) {
        Rat d = p.slope * k + p.intercept;
        if (d == 0) throw pole_error("zero linear factor in term denominator");
        v /= d;
    }
    return v;
}

// term(k+1)/term(k) via factor recurrences ((x)_{n+1}/(x)_n = x+n,
// (n+1)!/n! = n+1), never by re-expanding the products.
inline Rat term_ratio(const TermSpec& t, long k) {
    Rat v = t.geo_base;
    auto mul = [&](const Rat& f) {
        v *= f;
    };
    auto div = [&](const Rat& f) {
        if (f == 0) throw pole_error("zero factor in term ratio denominator");
        v = exactnum::checked_div(v, f);
    };
    for (const auto& f : t.poch_num) mul(f.base + (k + f.offset));
    for (const auto& f : t.poch_den) div(f.base + (k + f.offset));
    for (const auto& f : t.fact_num) mul(Rat(k + 1 + f.offset));
    for (const auto& f : t.fact_den) div(Rat(k + 1 + f.offset));
    for (const auto& p : t.poly_num) {
        mul(p.slope * (k + 1) + p.intercept);
        div(p.slope * k + p.intercept);
    }
    for (const auto& p : t.poly_den) {
        mul(p.slope * k + p.intercept);
        div(p.slope * (k + 1) + p.intercept);
    }
    return v;
}

namespace detail {

inline std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace detail

// term_ratio(k) as an exact rational function z*P(k)/Q(k); coefficients
// low-to-high, z folded into P. Used by the tail-expansion machinery.
struct RatioPolys {
    std::vector<Rat> num, den;
};

inline RatioPolys ratio_polys(const TermSpec& t) {
    using detail::poly_mul;
    std::vector<Rat> P{t.geo_base}, Q{Rat(1)};
    auto lin = [](const Rat& c0, const Rat& c1) {
        return std::vector<Rat>{c0, c1};
    };
    for (const auto& f : t.poch_num) P = poly_mul(P, lin(f.base + f.offset, Rat(1)));
    for (const auto& f : t.poch_den) Q = poly_mul(Q, lin(f.base + f.offset, Rat(1)));
    for (const auto& f : t.fact_num) P = poly_mul(P, lin(Rat(1 + f.offset), Rat(1)));
    for (const auto& f : t.fact_den) Q = poly_mul(Q, lin(Rat(1 + f.offset), Rat(1)));
    for (const auto& p : t.poly_num) {
        P = poly_mul(P, lin(p.slope + p.intercept, Rat(p.slope)));
        Q = poly_mul(Q, lin(p.intercept, Rat(p.slope)));
    }
    for (const auto& p : t.poly_den) {
        P = poly_mul(P, lin(p.intercept, Rat(p.slope)));
        Q = poly_mul(Q, lin(p.slope + p.intercept, Rat(p.slope)));
    }
    return {std::move(P), std::move(Q)};
}

// Instantiation-time validity checks: no denominator factor may vanish at any
// k >= start_index, and factorial arguments must be non-negative there.
// Early indices are probed by evaluation; unbounded factors symbolically.
inline void validate_term_spec(const TermSpec& t) {
    for (const auto& f : t.fact_num)
        if (t.start_index + f.offset < 0)
            throw pole_error("negative factorial argument at start index");
    for (const auto& f : t.fact_den)
        if (t.start_index + f.offset < 0)
            throw pole_error("negative factorial argument at start index");
    for (const auto& f : t.poch_den) {
        // (b)_n with n growing without bound hits every b+j, j >= 0
        if (f.base.get_den() == 1 && f.base <= 0)
            throw pole_error("denominator Pochhammer base is a non-positive integer");
    }
    for (const auto& p : t.poly_den) {
        if (p.slope == 0) {
            if (p.intercept == 0) throw pole_error("zero constant in polynomial denominator");
            continue;
        }
        Rat root = -p.intercept / p.slope;
        if (root.get_den() == 1 && root >= t.start_index)
            throw pole_error("polynomial denominator vanishes at an in-range index");
    }
    long probe = 4;
    for (const auto& f : t.poch_num) probe = std::max(probe, -f.offset + 2);
    for (const auto& f : t.poch_den) probe = std::max(probe, -f.offset + 2);
    for (long k = t.start_index; k < t.start_index + probe; ++k) term_value(t, k);
}

// A fully instantiated identity claim: lhs = prefactor * sum_{k>=start} term(k).
struct ConcreteSeries {
    TermSpec term;
    quadfield::ClosedFormConstant lhs;
    Rat prefactor = Rat(1);
    std::string family_id;
    std::vector<long> params;
};

}  // namespace piforms::hyperterm
