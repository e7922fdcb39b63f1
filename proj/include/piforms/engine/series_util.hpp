#pragma once

#include <vector>

#include "piforms/hyperterm/term_spec.hpp"

namespace piforms::engine {

using exactnum::Rat;
using Poly = std::vector<Rat>;  // coefficients low to high

inline Rat poly_eval(const Poly& p, const Rat& x) {
    Rat v(0);
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

// coefficients of p(K + x) as a polynomial in x
inline Poly poly_shift(const Poly& p, const Rat& K) {
    Poly r(p.size(), Rat(0));
    for (size_t i = p.size(); i-- > 0;) {
        // r <- r * x + p[i], with "* x" meaning multiply by (x + K)
        for (size_t j = r.size(); j-- > 1;) r[j] = r[j - 1] + K * r[j];
        r[0] = K * r[0] + p[i];
    }
    return r;
}

// Sufficient positivity certificate: all coefficients of p(K + x)
// non-negative implies p(k) >= 0 for every k >= K.
inline bool poly_nonneg_from(const Poly& p, long K) {
    Poly s = poly_shift(p, Rat(K));
    for (const auto& c : s)
        if (c < 0) return false;
    return true;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

inline Poly poly_scale(const Poly& a, const Rat& c) {
    Poly r = a;
    for (auto& x : r) x *= c;
    return r;
}

// Power-series expansion of the term ratio r(k) = P(k)/Q(k) in u = 1/k,
// assuming deg P = deg Q: r = r0 + r1 u + r2 u^2 + ...
inline std::vector<Rat> ratio_series(const Poly& P, const Poly& Q, long terms) {
    long dP = static_cast<long>(P.size()) - 1;
    long dQ = static_cast<long>(Q.size()) - 1;
    if (dP != dQ) throw std::invalid_argument("ratio_series: degree mismatch");
    std::vector<Rat> a(terms, Rat(0)), b(terms, Rat(0)), r(terms, Rat(0));
    for (long i = 0; i < terms; ++i) {
        if (dP - i >= 0) a[i] = P[dP - i];
        if (dQ - i >= 0) b[i] = Q[dQ - i];
    }
    for (long i = 0; i < terms; ++i) {
        Rat acc = a[i];
        for (long j = 0; j < i; ++j) acc -= r[j] * b[i - j];
        r[i] = exactnum::checked_div(acc, b[0]);
    }
    return r;
}

namespace detail {

// coefficients of (1+u)^(-i)
inline std::vector<Rat> binom_series(long i, long len) {
    std::vector<Rat> c(len);
    c[0] = Rat(1);
    for (long j = 1; j < len; ++j)
        c[j] = c[j - 1] * exactnum::rat(-i - j + 1, j);
    return c;
}

struct LinCoef {
    Rat c, s;  // constant part and coefficient of the current unknown
};

}  // namespace detail

// Asymptotic solution of the tail functional equation g(K) = 1 + r(K) g(K+1)
// for a unit-ratio series: with T(K) = sum_{k>=K} t(k) = t(K) g(K), g admits
// the expansion g(K) = gamma[-1] K + sum_{i>=0} gamma[i] K^(-i). Returns
// gamma[-1..N] (index shifted by one: result[0] = gamma_{-1}).
// The coefficients are solved order by order in u = 1/K; each order of the
// expanded equation is linear in exactly one new unknown.
inline std::vector<Rat> tail_gamma_coeffs(const Poly& P, const Poly& Q, long N) {
    using detail::LinCoef;
    long L = N + 6;
    std::vector<Rat> r = ratio_series(P, Q, L);
    if (r[0] != 1) throw std::invalid_argument("tail_gamma_coeffs: ratio limit is not 1");
    std::vector<Rat> gamma;  // gamma[-1], gamma[0], ..., solved so far

    auto solve_order = [&](long t) {
        long upto = t + 3;
        long L2 = upto + 2;
        // series indexed by u-order + 1, covering u^{-1} .. u^{L2-1}
        std::vector<LinCoef> g(L2 + 1, {Rat(0), Rat(0)});
        std::vector<LinCoef> gs(L2 + 1, {Rat(0), Rat(0)});  // g at K+1
        auto add = [&](std::vector<LinCoef>& ser, long order, const Rat& cv, const Rat& sv) {
            long idx = order + 1;
            if (idx >= 0 && idx <= L2) {
                ser[idx].c += cv;
                ser[idx].s += sv;
            }
        };
        for (long i = -1; i <= t; ++i) {
            Rat cv(0), sv(0);
            if (i < t)
                cv = gamma[i + 1];
            else
                sv = Rat(1);
            add(g, i, cv, sv);
            if (i == -1) {
                // gamma_{-1} (K+1) contributes at u^{-1} and u^0
                add(gs, -1, cv, sv);
                add(gs, 0, cv, sv);
            } else {
                auto bs = detail::binom_series(i, L2 + 2);
                for (long j = 0; j < L2 + 2; ++j) add(gs, i + j, cv * bs[j], sv * bs[j]);
            }
        }
        // E = g - 1 - r * gs, coefficientwise in u
        std::vector<LinCoef> E = g;
        E[1].c -= 1;
        for (long idx = 0; idx <= L2; ++idx) {
            for (long j = 0; j < static_cast<long>(r.size()); ++j) {
                long src = idx - j;
                if (src >= 0 && src <= L2) {
                    E[idx].c -= r[j] * gs[src].c;
                    E[idx].s -= r[j] * gs[src].s;
                }
            }
        }
        for (long idx = 0; idx <= L2; ++idx) {
            if (E[idx].s != 0) return exactnum::checked_div(-E[idx].c, E[idx].s);
            if (E[idx].c != 0)
                throw std::runtime_error("tail_gamma_coeffs: inconsistent expansion");
        }
        throw std::runtime_error("tail_gamma_coeffs: unknown not determined");
    };

    for (long t = -1; t <= N; ++t) gamma.push_back(solve_order(t));
    return gamma;
}

}  // namespace piforms::engine
