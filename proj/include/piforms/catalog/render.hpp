#pragma once

#include <sstream>
#include <string>

#include "piforms/catalog/goldens.hpp"

namespace piforms::catalog {

enum class RenderFormat { text, latex };

namespace detail {

inline std::string rat_text(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string rat_latex(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    if (r < 0) return "-\\frac{" + Rat(-r).get_num().get_str() + "}{" + r.get_den().get_str() + "}";
    return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

inline std::string index_str(long off) {
    if (off == 0) return "k";
    std::ostringstream os;
    os << "k" << (off > 0 ? "+" : "") << off;
    return os.str();
}

inline std::string poly_str(const hyperterm::LinearPoly& p) {
    std::ostringstream os;
    if (p.slope == -1)
        os << "-k";
    else if (p.slope == 1)
        os << "k";
    else if (p.slope != 0)
        os << p.slope << "k";
    if (p.intercept != 0) {
        if (p.intercept > 0 && p.slope != 0) os << "+";
        os << rat_text(p.intercept);
    }
    if (p.slope == 0 && p.intercept == 0) os << "0";
    return os.str();
}

inline std::string quad_str(const quadfield::QuadExt& x, RenderFormat fmt) {
    bool latex = fmt == RenderFormat::latex;
    std::ostringstream os;
    bool first = true;
    auto part = [&](const Rat& coeff, const std::string& radical) {
        if (coeff == 0) return;
        std::string c = latex ? rat_latex(coeff) : rat_text(coeff);
        if (!first && coeff > 0) os << "+";
        if (radical.empty()) {
            os << c;
        } else {
            if (coeff == 1)
                ;
            else if (coeff == -1)
                os << "-";
            else
                os << c << (latex ? "" : "*");
            os << radical;
        }
        first = false;
    };
    part(x.a, "");
    part(x.b, latex ? "\\sqrt{2}" : "sqrt(2)");
    part(x.c, latex ? "\\sqrt{3}" : "sqrt(3)");
    part(x.d, latex ? "\\sqrt{6}" : "sqrt(6)");
    if (first) os << "0";
    return os.str();
}

inline std::string closed_form_str(const ClosedFormConstant& c, RenderFormat fmt) {
    bool latex = fmt == RenderFormat::latex;
    std::string coeff = quad_str(c.coeff, fmt);
    bool composite = coeff.find_first_of("+-", 1) != std::string::npos;
    if (composite) coeff = latex ? "\\left(" + coeff + "\\right)" : "(" + coeff + ")";
    std::string pi = latex ? "\\pi" : "pi";
    switch (c.pi_power) {
        case 0: return coeff;
        case 1: return coeff == "1" ? pi : coeff + (latex ? "" : "*") + pi;
        case 2: return (coeff == "1" ? "" : coeff + (latex ? "" : "*")) + pi + (latex ? "^{2}" : "^2");
        case -1:
            if (latex) return "\\frac{" + coeff + "}{\\pi}";
            return coeff + "/pi";
        default: {
            std::ostringstream os;
            os << coeff << (latex ? "" : "*") << pi << (latex ? "^{" : "^") << c.pi_power
               << (latex ? "}" : "");
            return os.str();
        }
    }
}

// Summand rendering: a Pochhammer/factorial fraction followed by a
// polynomial/geometric fraction, so instances like the (3k+2)/4^k shapes
// print in their familiar displayed form.
inline std::string term_str(const TermSpec& t, RenderFormat fmt) {
    bool latex = fmt == RenderFormat::latex;
    auto base_str = [&](const Rat& b) {
        return latex ? rat_latex(b) : rat_text(b);
    };
    auto group = [&](const std::vector<hyperterm::PochFactor>& poch,
                     const std::vector<hyperterm::FactFactor>& fact) {
        std::ostringstream os;
        for (const auto& f : poch)
            os << "(" << base_str(f.base) << ")_{" << index_str(f.offset) << "}";
        for (const auto& f : fact) os << "(" << index_str(f.offset) << ")!";
        return os.str();
    };
    std::ostringstream os;
    if (t.scale != 1) os << (latex ? rat_latex(t.scale) : rat_text(t.scale)) << (latex ? "\\," : "*");
    std::string num = group(t.poch_num, t.fact_num);
    std::string den = group(t.poch_den, t.fact_den);
    if (!num.empty() || !den.empty()) {
        if (latex)
            os << "\\frac{" << (num.empty() ? "1" : num) << "}{" << (den.empty() ? "1" : den) << "}";
        else
            os << (num.empty() ? "1" : num) << "/(" << (den.empty() ? "1" : den) << ")";
        if (!latex) os << "*";
    }
    // polynomial factors over the geometric power z^k = zn^k / zd^k
    std::ostringstream pn, pd;
    bool multi_num = t.poly_num.size() + (t.geo_base.get_num() != 1 ? 1 : 0) > 1;
    bool multi_den = t.poly_den.size() + (t.geo_base.get_den() != 1 ? 1 : 0) > 1;
    for (const auto& p : t.poly_num)
        pn << (multi_num ? "(" + poly_str(p) + ")" : poly_str(p));
    for (const auto& p : t.poly_den)
        pd << (multi_den ? "(" + poly_str(p) + ")" : poly_str(p));
    if (t.geo_base.get_num() != 1)
        pn << (multi_num ? "(" : "") << t.geo_base.get_num().get_str()
           << (multi_num ? ")" : "") << (latex ? "^{k}" : "^k");
    if (t.geo_base.get_den() != 1)
        pd << t.geo_base.get_den().get_str() << (latex ? "^{k}" : "^k");
    std::string pns = pn.str(), pds = pd.str();
    if (!pns.empty() || !pds.empty()) {
        if (latex)
            os << "\\frac{" << (pns.empty() ? "1" : pns) << "}{" << (pds.empty() ? "1" : pds) << "}";
        else
            os << (pns.empty() ? "1" : pns) << "/(" << (pds.empty() ? "1" : pds) << ")";
    } else {
        std::string s = os.str();
        if (!s.empty() && (s.back() == '*' || s.empty())) os << "1";
    }
    return os.str();
}

}  // namespace detail

inline std::string render(const ConcreteSeries& s, RenderFormat fmt) {
    bool latex = fmt == RenderFormat::latex;
    std::ostringstream os;
    os << detail::closed_form_str(s.lhs, fmt) << (latex ? "=" : " = ");
    if (s.prefactor != 1)
        os << (latex ? detail::rat_latex(s.prefactor) : detail::rat_text(s.prefactor))
           << (latex ? "\\," : "*");
    os << (latex ? "\\sum_{k=" + std::to_string(s.term.start_index) + "}^{\\infty}"
                 : "sum_{k>=" + std::to_string(s.term.start_index) + "} ");
    os << detail::term_str(s.term, fmt);
    return os.str();
}

inline std::string render(const GoldenSeries& g, RenderFormat fmt) {
    return fmt == RenderFormat::latex ? g.latex_display : g.text_display;
}

}  // namespace piforms::catalog
