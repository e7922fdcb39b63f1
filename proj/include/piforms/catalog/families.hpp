#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "piforms/hyperterm/term_spec.hpp"

namespace piforms::catalog {

using exactnum::Rat;
using hyperterm::ConcreteSeries;
using hyperterm::TermSpec;
using quadfield::ClosedFormConstant;
using quadfield::QuadExt;

class unknown_family_error : public std::invalid_argument {
public:
    explicit unknown_family_error(const std::string& id)
        : std::invalid_argument("unknown family: " + id) {}
};

class constraint_error : public std::invalid_argument {
public:
    explicit constraint_error(const std::string& what) : std::invalid_argument(what) {}
};

// sum coeffs[i] * params[i] + constant, required >= 0
struct LinearForm {
    std::vector<long> coeffs;
    long constant = 0;
};

inline long eval_form(const LinearForm& f, const std::vector<long>& params) {
    long v = f.constant;
    for (size_t i = 0; i < f.coeffs.size(); ++i) v += f.coeffs[i] * params[i];
    return v;
}

inline std::string form_to_string(const LinearForm& f,
                                  const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < f.coeffs.size(); ++i) {
        long c = f.coeffs[i];
        if (c == 0) continue;
        if (c > 0 && !first) os << "+";
        if (c == -1)
            os << "-";
        else if (c != 1)
            os << c;
        os << names[i];
        first = false;
    }
    if (f.constant != 0 || first) {
        if (f.constant >= 0 && !first) os << "+";
        os << f.constant;
    }
    return os.str();
}

struct FamilySpec {
    std::string id;
    std::vector<std::string> param_names;
    std::vector<LinearForm> constraints;
    std::function<ClosedFormConstant(const std::vector<long>&)> lhs_builder;
    std::function<Rat(const std::vector<long>&)> prefactor_builder;
    std::function<TermSpec(const std::vector<long>&)> term_builder;
};

namespace detail {

inline Rat q(long n, long d = 1) { return exactnum::rat(n, d); }

inline Rat poch(const Rat& x, long n) { return hyperterm::pochhammer(x, n); }

inline ClosedFormConstant closed(Rat a, Rat b, Rat c, Rat d, int pipow) {
    return {QuadExt(std::move(a), std::move(b), std::move(c), std::move(d)), pipow};
}

// Theorems 2.2-2.6 share one summand shape parametrized by the pair
// (bb, bc) with bb + bc = 1.
inline FamilySpec section2_family(std::string id, Rat bb, Rat bc,
                                  ClosedFormConstant lhs,
                                  std::vector<LinearForm> constraints) {
    FamilySpec f;
    f.id = std::move(id);
    f.param_names = {"m", "n", "p"};
    f.constraints = std::move(constraints);
    f.lhs_builder = [lhs](const std::vector<long>&) { return lhs; };
    f.prefactor_builder = [bb, bc](const std::vector<long>& pr) {
        long m = pr[0], n = pr[1], p = pr[2];
        Rat den = poch(bb - q(1, 2), n) * poch(bc - q(1, 2), p) *
                  poch(q(1, 2), m - n - p);
        return exactnum::checked_div(Rat(1), den);
    };
    f.term_builder = [bb, bc](const std::vector<long>& pr) {
        long m = pr[0], n = pr[1], p = pr[2];
        TermSpec t;
        t.poch_num = {{2 * bb - 1, 2 * n}, {2 * bc - 1, 2 * p}};
        t.poch_den = {{q(1, 2) + bc, m - n}, {q(1, 2) + bb, m - p}, {q(1, 2), n + p}};
        t.fact_num = {{m}, {2 * m - 2 * n - 2 * p}};
        t.fact_den = {{0}};
        t.poly_num = {{3, Rat(2 * m)}};
        t.poly_den = {{1, Rat(m)}};
        t.geo_base = q(1, 4);
        t.scale = exactnum::rat_pow(q(1, 4), m);
        return t;
    };
    return f;
}

// Theorems 3.1-3.10 and the three-parameter base identity: alternating
// unit-ratio summands indexed by alpha.
inline FamilySpec section3_alt_family(std::string id, Rat alpha, long pc, long p0,
                                      long eps, ClosedFormConstant lhs) {
    FamilySpec f;
    f.id = std::move(id);
    f.param_names = {"m", "n", "p"};
    f.constraints = {{{1, -1, 0}, 0}, {{1, 0, -1}, 0}, {{1, -2, -2}, eps}};
    f.lhs_builder = [lhs](const std::vector<long>&) { return lhs; };
    f.prefactor_builder = [alpha](const std::vector<long>& pr) -> Rat {
        long m = pr[0], n = pr[1], p = pr[2];
        return exactnum::checked_div(poch(1 - alpha, m - n - p),
                                     poch(alpha, n) * poch(alpha, p));
    };
    f.term_builder = [alpha, pc, p0](const std::vector<long>& pr) {
        long m = pr[0], n = pr[1], p = pr[2];
        TermSpec t;
        t.poch_num = {{alpha, m}, {alpha, n}, {alpha, p}};
        t.fact_den = {{0}, {m - n}, {m - p}};
        t.poly_num = {{pc, Rat(p0 + (pc / 2) * m)}};
        t.geo_base = Rat(-1);
        return t;
    };
    return f;
}

// Theorems 3.11-3.20: four parameters, positive unit-ratio summands with a
// single alpha and an extra (1/2)_{k+q} column.
inline FamilySpec section3_pos_family(std::string id, Rat alpha, Rat w, long epsw,
                                      long eps, long pc, long p0,
                                      ClosedFormConstant lhs) {
    FamilySpec f;
    f.id = std::move(id);
    f.param_names = {"m", "n", "p", "q"};
    f.constraints = {{{1, -1, 0, 0}, 0}, {{1, 0, -1, 0}, 0}, {{1, -1, -1, -1}, -eps}};
    f.lhs_builder = [lhs](const std::vector<long>&) { return lhs; };
    f.prefactor_builder = [alpha, w, epsw](const std::vector<long>& pr) {
        long m = pr[0], n = pr[1], p = pr[2], qq = pr[3];
        Rat num = poch(1 - alpha, m - n - p) * poch(q(1, 2), m - n - qq) *
                  poch(q(1, 2), m - p - qq);
        Rat den = poch(w, m - n - p - qq - epsw) * poch(alpha, n) *
                  poch(alpha, p) * poch(q(1, 2), qq);
        return exactnum::checked_div(num, den);
    };
    f.term_builder = [alpha, pc, p0](const std::vector<long>& pr) {
        long m = pr[0], n = pr[1], p = pr[2], qq = pr[3];
        TermSpec t;
        t.poch_num = {{alpha, m}, {alpha, n}, {alpha, p}, {q(1, 2), qq}};
        t.poch_den = {{alpha + q(1, 2), m - qq}};
        t.fact_den = {{0}, {m - n}, {m - p}};
        t.poly_num = {{pc, Rat(p0 + (pc / 2) * m)}};
        t.geo_base = Rat(1);
        return t;
    };
    return f;
}

// Theorems 3.21-3.24 and the four-parameter base identity: positive
// unit-ratio summands built around (1/2)_{k+m}(1/2)_{k+n} and a mixed
// (cbase, dbase) pair.
inline FamilySpec section3_mixed_family(std::string id, Rat cbase, Rat dbase,
                                        Rat pdp, Rat pdq, Rat prefn, Rat prefq,
                                        ClosedFormConstant lhs) {
    FamilySpec f;
    f.id = std::move(id);
    f.param_names = {"m", "n", "p", "q"};
    f.constraints = {{{1, -1, 0, 0}, 0}, {{1, -1, -1, -1}, -1}};
    f.lhs_builder = [lhs](const std::vector<long>&) { return lhs; };
    f.prefactor_builder = [cbase, dbase, prefn, prefq](const std::vector<long>& pr) {
        long m = pr[0], n = pr[1], p = pr[2], qq = pr[3];
        Rat num = poch(prefn, m - n - p) * poch(prefq, m - n - qq) *
                  poch(q(1, 2), m - p - qq);
        Rat den = hyperterm::factorial_checked(m - n - p - qq - 1) *
                  poch(q(1, 2), n) * poch(cbase, p) * poch(dbase, qq);
        return exactnum::checked_div(num, den);
    };
    f.term_builder = [cbase, dbase, pdp, pdq](const std::vector<long>& pr) {
        long m = pr[0], n = pr[1], p = pr[2], qq = pr[3];
        TermSpec t;
        t.poch_num = {{q(1, 2), m}, {q(1, 2), n}, {cbase, p}, {dbase, qq}};
        t.poch_den = {{pdp, m - p}, {pdq, m - qq}};
        t.fact_den = {{0}, {m - n}};
        t.poly_num = {{4, Rat(1 + 2 * m)}};
        t.geo_base = Rat(1);
        return t;
    };
    return f;
}

inline std::vector<FamilySpec> build_registry() {
    std::vector<FamilySpec> reg;

    {
        FamilySpec f;
        f.id = "thm-2.1";
        f.param_names = {"m", "n"};
        f.constraints = {{{1, 0}, 0}, {{0, 1}, 0}};
        f.lhs_builder = [](const std::vector<long>& pr) {
            return closed(exactnum::rat_pow(q(1, 2), pr[0] + pr[1] + 1), 0, 0, 0, 1);
        };
        f.prefactor_builder = [](const std::vector<long>& pr) {
            long m = pr[0], n = pr[1];
            return exactnum::checked_div(
                Rat(exactnum::factorial(m) * exactnum::factorial(n)),
                Rat(exactnum::factorial(2 * m) * exactnum::factorial(2 * n)));
        };
        f.term_builder = [](const std::vector<long>& pr) {
            long m = pr[0], n = pr[1];
            TermSpec t;
            t.fact_num = {{2 * m}, {2 * n}};
            t.fact_den = {{0}};
            t.poch_den = {{q(3, 2), m + n}};
            t.geo_base = q(1, 2);
            t.scale = exactnum::rat_pow(q(1, 2), m + n);
            return t;
        };
        reg.push_back(std::move(f));
    }

    std::vector<LinearForm> consA = {{{1, 0, 0}, 0}, {{1, -1, -1}, 0}};
    std::vector<LinearForm> consB = {{{0, 1, 0}, 0}, {{0, 0, 1}, 0}, {{1, -1, -1}, 0}};
    reg.push_back(section2_family("thm-2.2", q(1, 4), q(3, 4),
                                  closed(q(1, 2), 0, 0, 0, 1), consA));
    reg.push_back(section2_family("thm-2.3", q(1, 6), q(5, 6),
                                  closed(0, 0, q(2, 9), 0, 1), consA));
    reg.push_back(section2_family("thm-2.4", q(1, 3), q(2, 3),
                                  closed(0, 0, q(1, 3), 0, 1), consA));
    reg.push_back(section2_family("thm-2.5", q(5, 12), q(7, 12),
                                  closed(q(1, 3), 0, q(1, 6), 0, 1), consA));
    reg.push_back(section2_family("thm-2.6", q(1, 12), q(11, 12),
                                  closed(q(5, 3), 0, q(-5, 6), 0, 1), consB));

    {
        FamilySpec f;
        f.id = "thm-2.7";
        f.param_names = {"m", "n", "p"};
        f.constraints = consB;
        f.lhs_builder = [](const std::vector<long>&) { return closed(1, 0, 0, 0, 2); };
        f.prefactor_builder = [](const std::vector<long>& pr) {
            long m = pr[0], n = pr[1], p = pr[2];
            return exactnum::checked_div(
                Rat(4), poch(q(1, 2), n) * poch(q(1, 2), p) * poch(q(1, 2), m - n - p));
        };
        f.term_builder = [](const std::vector<long>& pr) {
            long m = pr[0], n = pr[1], p = pr[2];
            TermSpec t;
            t.fact_num = {{m}, {2 * n}, {2 * p}, {2 * m - 2 * n - 2 * p}};
            t.fact_den = {{0}};
            t.poch_den = {{q(3, 2), m - n}, {q(3, 2), m - p}, {q(3, 2), n + p}};
            t.poly_num = {{3, Rat(2 * m + 2)}};
            t.geo_base = q(1, 4);
            t.scale = exactnum::rat_pow(q(1, 4), m);
            return t;
        };
        reg.push_back(std::move(f));
    }

    reg.push_back(section3_alt_family("thm-3.aa", q(1, 6), 12, 1, 1, closed(3, 0, 0, 0, -1)));
    reg.push_back(section3_alt_family("thm-3.bb", q(5, 6), 12, 5, -1, closed(3, 0, 0, 0, -1)));
    reg.push_back(section3_alt_family("thm-3.cc", q(1, 4), 8, 1, 1, closed(0, 2, 0, 0, -1)));
    reg.push_back(section3_alt_family("thm-3.dd", q(3, 4), 8, 3, -1, closed(0, 2, 0, 0, -1)));
    reg.push_back(section3_alt_family("thm-3.ee", q(1, 3), 6, 1, 0, closed(0, 0, q(3, 2), 0, -1)));
    reg.push_back(section3_alt_family("thm-3.ff", q(2, 3), 6, 2, -1, closed(0, 0, q(3, 2), 0, -1)));
    reg.push_back(section3_alt_family("thm-3.gg", q(1, 12), 24, 1, 1, closed(0, -3, 0, 3, -1)));
    reg.push_back(section3_alt_family("thm-3.hh", q(5, 12), 24, 5, 0, closed(0, 3, 0, 3, -1)));
    reg.push_back(section3_alt_family("thm-3.ii", q(7, 12), 24, 7, 0, closed(0, 3, 0, 3, -1)));
    reg.push_back(section3_alt_family("thm-3.jj", q(11, 12), 24, 11, -1, closed(0, -3, 0, 3, -1)));

    reg.push_back(section3_pos_family("thm-3.a", q(1, 4), q(1, 4), 0, 0, 8, 1, closed(4, 0, 0, 0, -1)));
    reg.push_back(section3_pos_family("thm-3.b", q(3, 4), q(3, 4), 1, 1, 8, 3, closed(1, 0, 0, 0, -1)));
    reg.push_back(section3_mixed_family("thm-3.c", q(1, 4), q(3, 4), q(5, 4), q(3, 4), q(3, 4), q(1, 4),
                                        closed(q(1, 2), 0, 0, 0, -1)));
    reg.push_back(section3_pos_family("thm-3.d", q(1, 3), q(1, 6), 0, 0, 6, 1, closed(0, 0, 3, 0, -1)));
    reg.push_back(section3_pos_family("thm-3.e", q(2, 3), q(5, 6), 1, 1, 6, 2, closed(0, 0, q(1, 2), 0, -1)));
    reg.push_back(section3_pos_family("thm-3.g", q(1, 6), q(1, 3), 0, 0, 12, 1, closed(0, 0, 2, 0, -1)));
    reg.push_back(section3_pos_family("thm-3.h", q(5, 6), q(2, 3), 1, 1, 12, 5, closed(0, 0, q(2, 3), 0, -1)));
    reg.push_back(section3_mixed_family("thm-3.i", q(1, 6), q(5, 6), q(4, 3), q(2, 3), q(5, 6), q(1, 6),
                                        closed(0, 0, q(2, 9), 0, -1)));
    reg.push_back(section3_pos_family("thm-3.j", q(1, 12), q(5, 12), 0, 0, 24, 1, closed(24, 0, -12, 0, -1)));
    reg.push_back(section3_pos_family("thm-3.k", q(5, 12), q(1, 12), 0, 0, 24, 5, closed(24, 0, 12, 0, -1)));
    reg.push_back(section3_pos_family("thm-3.l", q(7, 12), q(11, 12), 1, 1, 24, 7, closed(2, 0, 1, 0, -1)));
    reg.push_back(section3_pos_family("thm-3.m", q(11, 12), q(7, 12), 1, 1, 24, 11, closed(10, 0, -5, 0, -1)));
    reg.push_back(section3_mixed_family("thm-3.n", q(1, 12), q(11, 12), q(17, 12), q(7, 12), q(11, 12), q(1, 12),
                                        closed(q(5, 3), 0, q(-5, 6), 0, -1)));
    reg.push_back(section3_mixed_family("thm-3.o", q(5, 12), q(7, 12), q(13, 12), q(11, 12), q(7, 12), q(5, 12),
                                        closed(q(1, 3), 0, q(1, 6), 0, -1)));

    reg.push_back(section3_alt_family("chu", q(1, 2), 4, 1, 0, closed(2, 0, 0, 0, -1)));
    reg.push_back(section3_mixed_family("liu", q(1, 3), q(2, 3), q(7, 6), q(5, 6), q(2, 3), q(1, 3),
                                        closed(0, 0, q(1, 3), 0, -1)));

    return reg;
}

}  // namespace detail

inline const std::vector<FamilySpec>& list_families() {
    static const std::vector<FamilySpec> reg = detail::build_registry();
    return reg;
}

inline const FamilySpec& family(const std::string& id) {
    for (const auto& f : list_families())
        if (f.id == id) return f;
    throw unknown_family_error(id);
}

struct ConstraintCheck {
    bool ok = true;
    std::vector<std::string> violations;
};

inline ConstraintCheck check_constraints(const std::string& id,
                                         const std::vector<long>& params) {
    const FamilySpec& f = family(id);
    if (params.size() != f.param_names.size())
        throw std::invalid_argument("wrong parameter count for " + id);
    ConstraintCheck r;
    for (const auto& form : f.constraints) {
        if (eval_form(form, params) < 0) {
            r.ok = false;
            r.violations.push_back(form_to_string(form, f.param_names));
        }
    }
    return r;
}

inline ConcreteSeries instantiate(const std::string& id,
                                  const std::vector<long>& params) {
    const FamilySpec& f = family(id);
    ConstraintCheck c = check_constraints(id, params);
    if (!c.ok) {
        std::string msg = "constraint violation for " + id + ":";
        for (const auto& v : c.violations) msg += " " + v + " < 0";
        throw constraint_error(msg);
    }
    ConcreteSeries s;
    s.family_id = id;
    s.params = params;
    s.term = f.term_builder(params);
    hyperterm::validate_term_spec(s.term);
    s.prefactor = f.prefactor_builder(params);
    if (s.prefactor == 0) throw hyperterm::pole_error("zero prefactor for " + id);
    s.lhs = f.lhs_builder(params);
    return s;
}

}  // namespace piforms::catalog
