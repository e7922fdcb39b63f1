#pragma once

#include <optional>

#include "piforms/catalog/goldens.hpp"
#include "piforms/engine/strategies.hpp"
#include "piforms/exactnum/pi_oracle.hpp"

namespace piforms::engine {

enum class Verdict { verified, failed, inconclusive };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::verified: return "verified";
        case Verdict::failed: return "failed";
        default: return "inconclusive";
    }
}

struct VerifyReport {
    std::string family_id;
    std::vector<long> params;
    long requested_digits = 0;
    std::optional<FixedReal> lhs_value, rhs_value;
    Verdict verdict = Verdict::inconclusive;
    std::string details;
    std::optional<EvalReport> eval;
};

// Closed-form side embedded at working precision; pi comes from the
// cross-checked arctan oracle, never from any series in the catalog.
inline FixedReal closed_form_value(const quadfield::ClosedFormConstant& c, long prec) {
    FixedReal coeff = quadfield::quad_embed(c.coeff, prec);
    if (c.pi_power == 0) return coeff;
    FixedReal pi = exactnum::pi_reference(prec);
    switch (c.pi_power) {
        case 1: return coeff * pi;
        case 2: return coeff * pi * pi;
        case -1: return coeff / pi;
        default: throw std::invalid_argument("unsupported pi power");
    }
}

inline VerifyReport verify_series(const ConcreteSeries& s, long digits) {
    VerifyReport rep;
    rep.family_id = s.family_id;
    rep.params = s.params;
    rep.requested_digits = digits;
    long prec = detail::eval_precision(digits);

    FixedReal lhs = closed_form_value(s.lhs, prec);
    rep.lhs_value = lhs.round_to(digits);
    try {
        EvalReport ev = evaluate_series(s, digits);
        FixedReal rhs = FixedReal::from_rational(s.prefactor, prec) * ev.value;
        rep.rhs_value = rhs.round_to(digits);
        rep.eval = ev;

        Rat mag = exactnum::abs(lhs.midpoint());
        Rat tol = exactnum::rat(1, exactnum::pow10(digits)) * (mag < 1 ? Rat(1) : mag);
        if (lhs.agrees_with(rhs, tol)) {
            rep.verdict = Verdict::verified;
        } else if (lhs.differs_from(rhs, tol)) {
            rep.verdict = Verdict::failed;
            rep.details = "difference exceeds tolerance";
        } else {
            rep.verdict = Verdict::inconclusive;
            rep.details = "error bounds straddle the tolerance";
        }
    } catch (const inconclusive_error& e) {
        rep.verdict = Verdict::inconclusive;
        rep.details = e.what();
    }
    return rep;
}

inline VerifyReport verify(const std::string& family_id, const std::vector<long>& params,
                           long digits) {
    return verify_series(catalog::instantiate(family_id, params), digits);
}

inline VerifyReport verify_golden(const catalog::GoldenSeries& g, long digits) {
    ConcreteSeries s;
    s.term = g.term;
    s.lhs = g.lhs;
    s.prefactor = Rat(1);
    s.family_id = g.label;
    return verify_series(s, digits);
}

// All constraint-passing tuples with max |param| <= bound, in lexicographic
// order. A constraint-passing tuple that fails to instantiate is reported as
// a failed finding, not swallowed.
inline std::vector<std::vector<long>> feasible_tuples(const catalog::FamilySpec& f,
                                                      long bound) {
    std::vector<std::vector<long>> out;
    if (bound < 0) return out;
    size_t n = f.param_names.size();
    std::vector<long> tup(n, -bound);
    for (;;) {
        bool ok = true;
        for (const auto& form : f.constraints)
            if (catalog::eval_form(form, tup) < 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(tup);
        size_t i = n;
        while (i > 0) {
            if (tup[i - 1] < bound) {
                ++tup[i - 1];
                break;
            }
            tup[i - 1] = -bound;
            --i;
        }
        if (i == 0) break;
    }
    return out;
}

inline std::vector<VerifyReport> sweep(const std::string& family_id, long bound,
                                       long digits) {
    const catalog::FamilySpec& f = catalog::family(family_id);
    std::vector<VerifyReport> reports;
    for (const auto& tup : feasible_tuples(f, bound)) {
        try {
            reports.push_back(verify(family_id, tup, digits));
        } catch (const hyperterm::pole_error& e) {
            VerifyReport rep;
            rep.family_id = family_id;
            rep.params = tup;
            rep.requested_digits = digits;
            rep.verdict = Verdict::failed;
            rep.details = std::string("instantiation failure: ") + e.what();
            reports.push_back(std::move(rep));
        }
    }
    return reports;
}

}  // namespace piforms::engine
