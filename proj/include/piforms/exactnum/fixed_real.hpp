#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "piforms/exactnum/rational.hpp"

namespace piforms::exactnum {

// Scaled-integer real: value = mantissa * 10^(-precision), with a tracked
// absolute-error bound of err_ulp units of 10^(-precision). The true value is
// guaranteed to lie in [value - err, value + err]; operations only ever grow
// err_ulp, never reset it.
class FixedReal {
public:
    FixedReal(Int mantissa, long precision_digits, Int err_ulp)
        : mant_(std::move(mantissa)),
          prec_(precision_digits),
          err_(std::move(err_ulp)) {
        if (prec_ < 1) throw std::invalid_argument("precision must be >= 1");
        if (err_ < 0) throw std::invalid_argument("negative error bound");
    }

    static FixedReal exact_int(long v, long precision) {
        return FixedReal(Int(v) * pow10(precision), precision, 0);
    }

    // Round-to-nearest conversion of an exact rational; err_ulp <= 1,
    // and 0 when the value is exactly representable.
    static FixedReal from_rational(const Rat& x, long precision) {
        Int num = x.get_num() * pow10(precision);
        const Int& den = x.get_den();
        auto [m, exact] = div_round_nearest(num, den);
        return FixedReal(std::move(m), precision, exact ? 0 : 1);
    }

    const Int& mantissa() const { return mant_; }
    long precision() const { return prec_; }
    const Int& err_ulp() const { return err_; }

    Rat midpoint() const { return rat(mant_, pow10(prec_)); }
    Rat error_bound() const { return rat(err_, pow10(prec_)); }
    Rat lower() const { return rat(mant_ - err_, pow10(prec_)); }
    Rat upper() const { return rat(mant_ + err_, pow10(prec_)); }

    FixedReal operator-() const { return FixedReal(-mant_, prec_, err_); }

    friend FixedReal operator+(const FixedReal& a, const FixedReal& b) {
        a.require_same_precision(b);
        return FixedReal(a.mant_ + b.mant_, a.prec_, a.err_ + b.err_);
    }
    friend FixedReal operator-(const FixedReal& a, const FixedReal& b) {
        a.require_same_precision(b);
        return FixedReal(a.mant_ - b.mant_, a.prec_, a.err_ + b.err_);
    }

    friend FixedReal operator*(const FixedReal& a, const FixedReal& b) {
        a.require_same_precision(b);
        Int scale = pow10(a.prec_);
        auto [m, exact] = div_round_nearest(a.mant_ * b.mant_, scale);
        // |x*y - m| <= (|ma|*eb + |mb|*ea + ea*eb)/10^P + rounding
        Int cross = ::abs(a.mant_) * b.err_ + ::abs(b.mant_) * a.err_ +
                    a.err_ * b.err_;
        Int e = cdiv(cross, scale) + (exact ? 0 : 1);
        return FixedReal(std::move(m), a.prec_, std::move(e));
    }

    // Interval division: rigorous error propagation via exact rational
    // endpoint arithmetic. Fails when the divisor interval contains zero.
    friend FixedReal operator/(const FixedReal& a, const FixedReal& b) {
        a.require_same_precision(b);
        if (::abs(b.mant_) <= b.err_)
            throw zero_division_error("divisor interval contains zero");
        Rat lo1 = a.lower(), hi1 = a.upper();
        Rat lo2 = b.lower(), hi2 = b.upper();
        Rat q[4] = {lo1 / lo2, lo1 / hi2, hi1 / lo2, hi1 / hi2};
        Rat lo = q[0], hi = q[0];
        for (int i = 1; i < 4; ++i) {
            if (q[i] < lo) lo = q[i];
            if (q[i] > hi) hi = q[i];
        }
        Rat mid = (lo + hi) / 2;
        FixedReal m = from_rational(mid, a.prec_);
        Int e = ceil_ulps(hi - mid, a.prec_) + m.err_ + 1;
        return FixedReal(m.mant_, a.prec_, std::move(e));
    }

    FixedReal mul_int(const Int& c) const {
        return FixedReal(mant_ * c, prec_, err_ * ::abs(c));
    }

    // Reduce precision; the dropped digits and the old error bound fold into
    // the new err_ulp.
    FixedReal round_to(long precision) const {
        if (precision == prec_) return *this;
        if (precision > prec_) {
            Int f = pow10(precision - prec_);
            return FixedReal(mant_ * f, precision, err_ * f);
        }
        Int f = pow10(prec_ - precision);
        auto [m, exact] = div_round_nearest(mant_, f);
        Int e = cdiv(err_, f) + (exact ? 0 : 1);
        return FixedReal(std::move(m), precision, std::move(e));
    }

    // |a - b| <= tol guaranteed? Comparisons factor the error bounds in, so
    // "true" is a rigorous statement about the represented values.
    bool agrees_with(const FixedReal& o, const Rat& tol) const {
        Rat diff = abs(midpoint() - o.midpoint());
        return diff + error_bound() + o.error_bound() <= tol;
    }
    bool differs_from(const FixedReal& o, const Rat& tol) const {
        Rat diff = abs(midpoint() - o.midpoint());
        return diff - error_bound() - o.error_bound() > tol;
    }

    std::string to_string() const {
        Int m = mant_;
        bool neg = m < 0;
        if (neg) m = -m;
        std::string digits = m.get_str();
        std::string out;
        if (static_cast<long>(digits.size()) <= prec_) {
            out = "0." + std::string(prec_ - digits.size(), '0') + digits;
        } else {
            out = digits.substr(0, digits.size() - prec_) + "." +
                  digits.substr(digits.size() - prec_);
        }
        return (neg ? "-" : "") + out;
    }

    static std::pair<Int, bool> div_round_nearest(const Int& num, const Int& den) {
        // den > 0 assumed; ties round away from zero
        Int n2 = num * 2;
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n2.get_mpz_t(), den.get_mpz_t());
        // q = floor(2num/den); result = floor((q+1)/2) rounds to nearest
        Int res = (q + 1) >> 1;
        bool exact = (r == 0) && mpz_even_p(q.get_mpz_t());
        return {res, exact};
    }

private:
    static Int cdiv(const Int& a, const Int& b) {
        Int q;
        mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    static Int ceil_ulps(const Rat& x, long prec) {
        Rat scaled = x * pow10(prec);
        Int q;
        mpz_cdiv_q(q.get_mpz_t(), scaled.get_num().get_mpz_t(),
                   scaled.get_den().get_mpz_t());
        return q;
    }
    void require_same_precision(const FixedReal& o) const {
        if (prec_ != o.prec_)
            throw std::invalid_argument("mixed FixedReal precisions");
    }

    Int mant_;
    long prec_;
    Int err_;
};

// ceil of err expressed in ulps at the given precision
inline Int ulps_of(const Rat& x, long precision) {
    Rat scaled = abs(x) * pow10(precision);
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_num().get_mpz_t(),
               scaled.get_den().get_mpz_t());
    return q;
}

// FixedReal from an exact rational plus a rigorous absolute error bound.
inline FixedReal fixed_from_bounded(const Rat& value, const Rat& abs_err,
                                    long precision) {
    FixedReal v = FixedReal::from_rational(value, precision);
    return FixedReal(v.mantissa(), precision, v.err_ulp() + ulps_of(abs_err, precision));
}

// floor(sqrt(n * 10^(2P))) scaled back by 10^(-P); err_ulp 1 unless n is a
// perfect square times a power of ten, in which case the result is exact.
inline FixedReal fixed_sqrt(const Int& n, long precision) {
    if (n < 0) throw std::domain_error("fixed_sqrt of negative integer");
    Int scaled = n * pow10(2 * static_cast<unsigned long>(precision));
    Int s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    bool exact = (s * s == scaled);
    return FixedReal(std::move(s), precision, exact ? 0 : 1);
}

// Guard-digit policy: compute at P + guard_digits(steps) internally so that
// accumulated err_ulp stays far below one ulp of the requested precision.
inline long guard_digits(long steps) {
    long g = 10;
    long s = steps < 1 ? 1 : steps;
    while (s > 1) {
        ++g;
        s = (s + 9) / 10;
    }
    return g;
}

}  // namespace piforms::exactnum
