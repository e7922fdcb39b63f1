#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "piforms/engine/series_util.hpp"
#include "piforms/exactnum/fixed_real.hpp"

namespace piforms::engine {

using exactnum::FixedReal;
using exactnum::Int;
using hyperterm::ConcreteSeries;
using hyperterm::TermSpec;

enum class Strategy { geometric, alternating_accel, direct_partial };

inline const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::geometric: return "geometric";
        case Strategy::alternating_accel: return "alternating_accel";
        default: return "direct_partial";
    }
}

// Raised when a strategy cannot certify its preconditions or its cross-check
// disagrees; callers must downgrade to an inconclusive verdict, never to a
// wrong one.
class inconclusive_error : public std::runtime_error {
public:
    explicit inconclusive_error(const std::string& what) : std::runtime_error(what) {}
};

struct EvalReport {
    FixedReal value;  // error bound (rigorous or heuristic) folded into err_ulp
    Strategy strategy;
    long terms_used = 0;
    bool rigorous = true;
    Rat error_bound;             // absolute bound on |value - true sum|
    long crosscheck_digits = 0;  // heuristic path: digits agreed with the bracket
};

namespace detail {

inline long eval_precision(long digits) {
    return digits + exactnum::guard_digits(digits);
}

// digits of agreement between an estimate and a bracketing interval,
// capped at the working precision
inline long agreement_digits(const Rat& err, const Rat& scale_ref, long cap) {
    Rat rel = err / (scale_ref < 1 ? Rat(1) : scale_ref);
    if (rel <= 0) return cap;
    double d = -std::log10(rel.get_d());
    if (!(d > 0)) return 0;
    if (d > static_cast<double>(cap)) return cap;
    return static_cast<long>(d);
}

}  // namespace detail

// Rigorous summation for |ratio| bounded below 1: exact partial sums with a
// certified geometric tail bound. The ratio bound r* is certified by checking
// that |ratio| approaches its rational-function limit monotonically over a
// 50-term window, then adding a 1% margin.
inline EvalReport sum_geometric(const ConcreteSeries& s, long digits) {
    const TermSpec& t = s.term;
    long prec = detail::eval_precision(digits);
    Rat tol = exactnum::rat(1, exactnum::pow10(digits + 2));

    hyperterm::RatioPolys rp = hyperterm::ratio_polys(t);
    if (rp.num.size() > rp.den.size())
        throw inconclusive_error("geometric: term ratio diverges");
    Rat limit = rp.num.size() == rp.den.size()
                    ? exactnum::checked_div(rp.num.back(), rp.den.back())
                    : Rat(0);
    Rat abs_limit = exactnum::abs(limit);
    if (abs_limit >= 1) throw inconclusive_error("geometric: ratio limit not below 1");

    // |ratio| must approach its limit monotonically over a 50-term window;
    // near a crossing of the limit this fails transiently, so certification
    // is retried further out instead of giving up at the first window.
    auto try_certify_rstar = [&](long k) -> std::optional<Rat> {
        Rat first = exactnum::abs(term_ratio(t, k));
        Rat prev_dist = exactnum::abs(first - abs_limit);
        for (long j = k + 1; j <= k + 50; ++j) {
            Rat rj = exactnum::abs(term_ratio(t, j));
            Rat dist = exactnum::abs(rj - abs_limit);
            if (dist > prev_dist) return std::nullopt;
            prev_dist = dist;
        }
        Rat rstar = (first > abs_limit ? first : abs_limit) * exactnum::rat(101, 100);
        if (rstar >= 1) return std::nullopt;
        return rstar;
    };

    long k = t.start_index;
    Rat term = term_value(t, k);
    Rat sum(0);
    std::optional<Rat> rstar;
    Rat tail_bound(0);
    long next_certify = t.start_index;
    const long max_terms = 200000;
    for (;;) {
        sum += term;
        Rat at = exactnum::abs(term);
        if (!rstar && at < tol && k >= next_certify) {
            rstar = try_certify_rstar(k);
            if (!rstar) next_certify = k + 25;
            if (!rstar && k - t.start_index > 5000)
                throw inconclusive_error("geometric: ratio bound certification failed");
        }
        if (rstar) {
            tail_bound = at * *rstar / (1 - *rstar);
            if (tail_bound < tol) break;
        }
        if (k - t.start_index >= max_terms)
            throw inconclusive_error("geometric: term budget exhausted");
        term *= term_ratio(t, k);
        ++k;
    }
    EvalReport r{exactnum::fixed_from_bounded(sum, tail_bound, prec),
                 Strategy::geometric, k - t.start_index + 1, true, tail_bound, 0};
    return r;
}

namespace detail {

// Exact Chebyshev-weighted acceleration of sum_{j} (-1)^j a_j over the first
// n magnitudes; error ~ (3+sqrt8)^(-n) for totally monotone sequences.
inline Rat accelerate_alternating(const std::vector<Rat>& a, long n) {
    Int d0(1), d1(3);
    for (long i = 1; i < n; ++i) {
        Int next = 6 * d1 - d0;
        d0 = d1;
        d1 = next;
    }
    Int d = (n == 0) ? d0 : d1;
    Rat b(-1), c(-Rat(d)), sum(0);
    for (long k = 0; k < n; ++k) {
        c = b - c;
        sum += c * a[k];
        b = b * 2 * (k + n) * (k - n);
        b = exactnum::checked_div(b, Rat((2 * k + 1) * (k + 1)));
    }
    return exactnum::checked_div(sum, Rat(d));
}

struct Bracket {
    Rat lo, hi;
    long levels;
};

// Bracket the limit of partial sums s_i of an alternating series by repeated
// pairwise averaging. Each level is accepted only if its first differences
// alternate in sign with decreasing magnitude across the window; the limit
// then lies between consecutive entries.
inline Bracket average_bracket(std::vector<Rat> s, long max_levels) {
    long level = 0;
    auto valid = [](const std::vector<Rat>& v) {
        if (v.size() < 3) return false;
        Rat prev = v[1] - v[0];
        if (prev == 0) return false;
        for (size_t i = 1; i + 1 < v.size(); ++i) {
            Rat d = v[i + 1] - v[i];
            if (d == 0) return false;
            if (exactnum::sgn(d) == exactnum::sgn(prev)) return false;
            if (exactnum::abs(d) >= exactnum::abs(prev)) return false;
            prev = d;
        }
        return true;
    };
    if (!valid(s)) throw inconclusive_error("bracket: partial sums not alternating/decreasing");
    while (level < max_levels && s.size() >= 4) {
        std::vector<Rat> next(s.size() - 1);
        for (size_t i = 0; i + 1 < s.size(); ++i) next[i] = (s[i] + s[i + 1]) / 2;
        if (!valid(next)) break;
        s = std::move(next);
        ++level;
    }
    Rat a = s[s.size() - 2], b = s[s.size() - 1];
    return {a < b ? a : b, a < b ? b : a, level};
}

}  // namespace detail

// Accelerated summation for alternating unit-ratio series: exact Chebyshev
// weights over a window where signs strictly alternate and magnitudes
// strictly decrease, cross-checked against a bracketing of averaged partial
// sums. The error claim is heuristic; the cross-check is mandatory.
inline EvalReport sum_alternating_accel(const ConcreteSeries& s, long digits) {
    const TermSpec& t = s.term;
    if (t.geo_base != -1)
        throw inconclusive_error("alternating_accel: geometric base is not -1");
    long prec = detail::eval_precision(digits);

    long n_accel = static_cast<long>(std::ceil((digits + 2) * std::log(10.0) /
                                               std::log(3.0 + std::sqrt(8.0)))) + 5;
    const long window = 60, bracket_len = 130;
    long scan = 400;
    long need = scan + window + std::max(n_accel, bracket_len + 2);

    std::vector<Rat> vals;
    vals.reserve(need);
    vals.push_back(term_value(t, t.start_index));
    for (long i = 1; i < need; ++i)
        vals.push_back(vals.back() * term_ratio(t, t.start_index + i - 1));

    long k0 = -1;
    for (long i = 0; i + window < static_cast<long>(vals.size()); ++i) {
        bool ok = true;
        for (long j = i; j < i + window - 1 && ok; ++j) {
            if (exactnum::sgn(vals[j]) * exactnum::sgn(vals[j + 1]) >= 0) ok = false;
            else if (exactnum::abs(vals[j]) <= exactnum::abs(vals[j + 1])) ok = false;
        }
        if (ok) {
            k0 = i;
            break;
        }
        if (i >= scan) break;
    }
    if (k0 < 0)
        throw inconclusive_error("alternating_accel: no decreasing alternating window found");

    Rat head(0);
    for (long i = 0; i < k0; ++i) head += vals[i];
    int sign = exactnum::sgn(vals[k0]);
    std::vector<Rat> mags(n_accel);
    for (long j = 0; j < n_accel; ++j) {
        Rat m = vals[k0 + j];
        if (sign < 0) m = -m;
        if (j % 2 == 1) m = -m;
        if (m <= 0)
            throw inconclusive_error("alternating_accel: alternation broke inside window");
        mags[j] = m;
    }
    Rat accel = detail::accelerate_alternating(mags, n_accel);
    Rat value = head + (sign < 0 ? -accel : accel);

    // mandatory cross-check against bracketing partial sums
    std::vector<Rat> partials(bracket_len + 1);
    Rat run = head;
    for (long i = 0; i <= bracket_len; ++i) {
        run += vals[k0 + i];
        partials[i] = run;
    }
    detail::Bracket br = detail::average_bracket(std::move(partials), 14);
    long cd_req = (digits + 4) / 5;
    Rat scale_ref = exactnum::abs(value);
    Rat cd_tol = exactnum::rat(1, exactnum::pow10(cd_req)) * (scale_ref < 1 ? Rat(1) : scale_ref);
    if (value < br.lo - cd_tol || value > br.hi + cd_tol)
        throw inconclusive_error("alternating_accel: accelerated value disagrees with bracket");
    Rat out_low = br.lo - value, out_high = value - br.hi;
    Rat outside = out_low > out_high ? out_low : out_high;
    if (outside < 0) outside = Rat(0);
    Rat agree_err = (br.hi - br.lo) + outside;
    long cd = detail::agreement_digits(agree_err, scale_ref, digits);
    if (cd < cd_req)
        throw inconclusive_error("alternating_accel: bracket too wide for cross-check");

    // heuristic estimate from the acceleration scheme's nominal decay
    Int d0(1), d1(3);
    for (long i = 1; i < n_accel; ++i) {
        Int next = 6 * d1 - d0;
        d0 = d1;
        d1 = next;
    }
    Rat est = exactnum::checked_div(4 * mags[0], Rat(d1));

    EvalReport r{exactnum::fixed_from_bounded(value, est, prec),
                 Strategy::alternating_accel, k0 + n_accel, false, est, cd};
    return r;
}

// Positive unit-ratio series: exact partial sum to a cutoff K plus an
// asymptotic tail t(K) g(K) from the expansion of g(K) = 1 + r(K) g(K+1).
// Heuristic error from the last expansion term; cross-checked against a
// rigorous telescoping bracket certified by polynomial coefficient
// positivity.
inline EvalReport sum_direct_partial(const ConcreteSeries& s, long digits) {
    const TermSpec& t = s.term;
    if (t.geo_base != 1)
        throw inconclusive_error("direct_partial: geometric base is not +1");
    long prec = detail::eval_precision(digits);

    hyperterm::RatioPolys rp = hyperterm::ratio_polys(t);
    if (rp.num.size() != rp.den.size())
        throw inconclusive_error("direct_partial: ratio degrees differ");
    const Poly& P = rp.num;
    const Poly& Q = rp.den;

    long N = 20 + digits / 2;
    long K = std::max<long>(t.start_index + 80, 120 + 12 * digits);

    Rat sum(0);
    Rat term = term_value(t, t.start_index);
    for (long k = t.start_index; k < K; ++k) {
        sum += term;
        term *= term_ratio(t, k);
    }
    Rat tK = term;  // exact t(K)
    if (tK <= 0) throw inconclusive_error("direct_partial: tail terms not positive");

    std::vector<Rat> gamma = tail_gamma_coeffs(P, Q, N);
    Rat invK = exactnum::rat(1, K);
    Rat g = gamma[0] * K;
    Rat pw(1);
    for (long i = 0; i <= N; ++i) {
        g += gamma[i + 1] * pw;
        pw *= invK;
    }
    Rat value = sum + tK * g;
    Rat est = exactnum::abs(tK * gamma[N + 1]) * exactnum::rat_pow(invK, N) * 4 +
              exactnum::rat(1, exactnum::pow10(digits + 6));

    // telescoping bracket: with the polynomial weight W built from the first
    // expansion coefficients, u(k) = t(k) W(k)/k^J telescopes against
    // delta(k) = W(k)/k^J - r(k) W(k+1)/(k+1)^J = 1 + O(k^(-J-1)),
    // so sum_{k>=K} t(k) lies in [u(K)/(1+eps), u(K)/(1-eps)] once
    // |delta - 1| <= eps is certified for all k >= K by coefficient
    // positivity of the shifted certificate polynomials.
    Rat c = ratio_series(P, Q, 2)[1];
    if (c >= -1) throw inconclusive_error("direct_partial: tail decay too slow to bracket");
    const long J = 8;
    Poly W(J + 2, Rat(0));
    for (long i = 1; i <= J + 1; ++i) W[i] = gamma[J - i + 1];
    using hyperterm::detail::poly_mul;
    Poly xj(J + 1, Rat(0));
    xj[J] = Rat(1);
    Poly x1j{Rat(1)};
    for (long i = 0; i < J; ++i) x1j = poly_mul(x1j, {Rat(1), Rat(1)});
    Poly A = poly_sub(poly_mul(poly_mul(W, x1j), Q),
                      poly_mul(poly_mul(P, poly_shift(W, Rat(1))), xj));
    Poly B = poly_mul(poly_mul(xj, x1j), Q);
    Poly diff = poly_sub(A, B);
    if (!poly_nonneg_from(Q, K) || poly_eval(Q, Rat(K)) <= 0 || !poly_nonneg_from(P, K) ||
        !poly_nonneg_from(B, K) || poly_eval(B, Rat(K)) <= 0)
        throw inconclusive_error("direct_partial: positivity certificate failed");
    Rat eps = exactnum::abs(exactnum::checked_div(poly_eval(diff, Rat(K)), poly_eval(B, Rat(K)))) * 2 +
              exactnum::rat(1, exactnum::pow10(15));
    bool certified = false;
    for (int attempt = 0; attempt < 20 && eps < exactnum::rat(1, 2); ++attempt) {
        if (poly_nonneg_from(poly_sub(poly_scale(B, eps), diff), K) &&
            poly_nonneg_from(poly_sub(poly_scale(B, eps), poly_scale(diff, Rat(-1))), K)) {
            certified = true;
            break;
        }
        eps *= 2;
    }
    if (!certified)
        throw inconclusive_error("direct_partial: delta band certificate failed");
    Rat u = tK * exactnum::checked_div(poly_eval(W, Rat(K)), Rat(exactnum::ipow(exactnum::Int(K), J)));
    if (u <= 0) throw inconclusive_error("direct_partial: telescoping weight not positive");
    Rat lo = sum + exactnum::checked_div(u, 1 + eps);
    Rat hi = sum + exactnum::checked_div(u, 1 - eps);

    long cd_req = (digits + 4) / 5;
    Rat scale_ref = exactnum::abs(value);
    Rat cd_tol = exactnum::rat(1, exactnum::pow10(cd_req)) * (scale_ref < 1 ? Rat(1) : scale_ref);
    if (value < lo - cd_tol || value > hi + cd_tol)
        throw inconclusive_error("direct_partial: tail expansion disagrees with bracket");
    Rat out_low = lo - value, out_high = value - hi;
    Rat outside = out_low > out_high ? out_low : out_high;
    if (outside < 0) outside = Rat(0);
    Rat agree_err = (hi - lo) + outside;
    long cd = detail::agreement_digits(agree_err, scale_ref, digits);
    if (cd < cd_req)
        throw inconclusive_error("direct_partial: bracket too wide for cross-check");

    EvalReport r{exactnum::fixed_from_bounded(value, est, prec),
                 Strategy::direct_partial, K - t.start_index, false, est, cd};
    return r;
}

// Strategy dispatch on the geometric base.
inline EvalReport evaluate_series(const ConcreteSeries& s, long digits) {
    Rat az = exactnum::abs(s.term.geo_base);
    if (az < 1) return sum_geometric(s, digits);
    if (s.term.geo_base == -1) return sum_alternating_accel(s, digits);
    if (s.term.geo_base == 1) return sum_direct_partial(s, digits);
    throw inconclusive_error("no applicable summation strategy");
}

}  // namespace piforms::engine
