#pragma once

#include <string>
#include <vector>

#include "piforms/catalog/families.hpp"

namespace piforms::catalog {

// A printed example series, stored exactly as displayed (including its
// printed start index), independent of the family it specializes.
struct GoldenSeries {
    std::string label;
    TermSpec term;
    ClosedFormConstant lhs;
    std::string text_display;
    std::string latex_display;
};

namespace detail {

inline std::vector<GoldenSeries> build_goldens() {
    using hyperterm::FactFactor;
    using hyperterm::LinearPoly;
    using hyperterm::PochFactor;
    std::vector<GoldenSeries> g;
    auto add = [&](std::string label, ClosedFormConstant lhs, TermSpec t,
                   std::string text, std::string latex) {
        g.push_back({std::move(label), std::move(t), std::move(lhs),
                     std::move(text), std::move(latex)});
    };
    auto spec = [](std::vector<PochFactor> pn, std::vector<PochFactor> pd,
                   std::vector<FactFactor> fn, std::vector<LinearPoly> qn,
                   Rat z, Rat scale = Rat(1), long start = 0) {
        TermSpec t;
        t.poch_num = std::move(pn);
        t.poch_den = std::move(pd);
        t.fact_num = std::move(fn);
        t.poly_num = std::move(qn);
        t.geo_base = std::move(z);
        t.scale = std::move(scale);
        t.start_index = start;
        return t;
    };

    add("eq-1", closed(q(1, 2), 0, 0, 0, 1),
        spec({}, {{q(3, 2), 0}}, {{0}}, {}, q(1, 2)),
        "sum_{k>=0} k!/(2k+1)!! = pi/2",
        "\\frac{\\pi}{2}=\\sum_{k=0}^{\\infty}\\frac{k!}{(2k+1)!!}");
    add("eq-2", closed(0, 0, q(2, 9), 0, 1),
        spec({}, {{q(3, 2), 0}}, {{0}}, {}, q(1, 4)),
        "sum_{k>=0} (k!)^2/(2k+1)! = 2*pi/(3*sqrt(3))",
        "\\frac{2\\pi}{3\\sqrt{3}}=\\sum_{k=0}^{\\infty}\\frac{(k!)^2}{(2k+1)!}");
    add("thm-2.1-ex1", closed(q(1, 2), 0, 0, 0, 1),
        spec({}, {{q(3, 2), 0}}, {{1}}, {}, q(1, 2), Rat(1), 1),
        "sum_{k>=1} (k+1)!/(2k+1)!! = pi/2",
        "\\frac{\\pi}{2}=\\sum_{k=1}^{\\infty}\\frac{(k+1)!}{(2k+1)!!}");
    add("thm-2.1-ex2", closed(q(3, 2), 0, 0, 0, 1),
        spec({}, {{q(3, 2), 0}}, {{2}}, {}, q(1, 2), Rat(1), 2),
        "sum_{k>=2} (k+2)!/(2k+1)!! = 3*pi/2",
        "\\frac{3\\pi}{2}=\\sum_{k=2}^{\\infty}\\frac{(k+2)!}{(2k+1)!!}");
    add("thm-2.2-ex1", closed(q(1, 4), 0, 0, 0, 1),
        spec({{q(1, 2), 0}}, {{q(5, 4), 0}, {q(7, 4), 0}}, {{0}}, {{3, Rat(2)}},
             q(1, 4), q(1, 3)),
        "sum_{k>=0} (2k)!/(4k+3)!!*(3k+2) = pi/4",
        "\\frac{\\pi}{4}=\\sum_{k=0}^{\\infty}\\frac{(2k)!}{(4k+3)!!}(3k+2)");
    add("thm-2.2-ex2", closed(q(1, 4), 0, 0, 0, 1),
        spec({{q(1, 2), 0}}, {{q(3, 4), 0}, {q(5, 4), 0}}, {{0}}, {{3, Rat(1)}},
             q(1, 4), Rat(1), 1),
        "sum_{k>=1} (2k)!/(4k+1)!!*(3k+1) = pi/4",
        "\\frac{\\pi}{4}=\\sum_{k=1}^{\\infty}\\frac{(2k)!}{(4k+1)!!}(3k+1)");
    add("thm-2.3-ex1", closed(0, 0, q(2, 9), 0, 1),
        spec({}, {{q(3, 2), 0}}, {{0}}, {{3, Rat(2)}}, q(1, 4), Rat(1), 1),
        "sum_{k>=1} (k!)^2/(2k+1)!*(3k+2) = 2*pi/(3*sqrt(3))",
        "\\frac{2\\pi}{3\\sqrt{3}}=\\sum_{k=1}^{\\infty}\\frac{(k!)^2}{(2k+1)!}(3k+2)");
    add("thm-2.3-ex2", closed(0, 0, q(4, 27), 0, 1),
        spec({}, {{q(3, 2), 0}}, {{0}}, {{3, Rat(1)}, {1, Rat(0)}}, q(1, 4), Rat(1), 2),
        "sum_{k>=2} (k!)^2/(2k+1)!*(3k+1)*k = 4*pi/(9*sqrt(3))",
        "\\frac{4\\pi}{9\\sqrt{3}}=\\sum_{k=2}^{\\infty}\\frac{(k!)^2}{(2k+1)!}(3k+1)k");
    add("thm-2.4-ex1", closed(0, 0, q(5, 12), 0, 1),
        spec({{q(1, 3), 0}, {q(5, 3), 0}},
             {{q(3, 2), 0}, {q(7, 6), 0}, {q(11, 6), 0}}, {{0}}, {{3, Rat(2)}},
             q(1, 4)),
        "sum_{k>=0} (1)_k(1/3)_k(5/3)_k/((3/2)_k(7/6)_k(11/6)_k)*(3k+2)/4^k = 5*pi/(4*sqrt(3))",
        "\\frac{5\\pi}{4\\sqrt{3}}=\\sum_{k=0}^{\\infty}\\frac{(1)_k(\\frac{1}{3})_k(\\frac{5}{3})_k}"
        "{(\\frac{3}{2})_k(\\frac{7}{6})_k(\\frac{11}{6})_k}\\frac{3k+2}{4^k}");
    add("thm-2.4-ex2", closed(0, 0, q(1, 6), 0, 1),
        spec({{q(2, 3), 0}, {q(4, 3), 0}},
             {{q(3, 2), 0}, {q(5, 6), 0}, {q(7, 6), 0}}, {{0}}, {{3, Rat(1)}},
             q(1, 4), Rat(1), 1),
        "sum_{k>=1} (1)_k(2/3)_k(4/3)_k/((3/2)_k(5/6)_k(7/6)_k)*(3k+1)/4^k = pi/(2*sqrt(3))",
        "\\frac{\\pi}{2\\sqrt{3}}=\\sum_{k=1}^{\\infty}\\frac{(1)_k(\\frac{2}{3})_k(\\frac{4}{3})_k}"
        "{(\\frac{3}{2})_k(\\frac{5}{6})_k(\\frac{7}{6})_k}\\frac{3k+1}{4^k}");
    add("thm-2.5-ex1", closed(q(11, 30), 0, q(11, 60), 0, 1),
        spec({{q(1, 6), 0}, {q(11, 6), 0}},
             {{q(3, 2), 0}, {q(13, 12), 0}, {q(23, 12), 0}}, {{0}}, {{3, Rat(2)}},
             q(1, 4)),
        "sum_{k>=0} (1)_k(1/6)_k(11/6)_k/((3/2)_k(13/12)_k(23/12)_k)*(3k+2)/4^k = 11*pi/(60*(2-sqrt(3)))",
        "\\frac{11\\pi}{60(2-\\sqrt{3})}=\\sum_{k=0}^{\\infty}\\frac{(1)_k(\\frac{1}{6})_k(\\frac{11}{6})_k}"
        "{(\\frac{3}{2})_k(\\frac{13}{12})_k(\\frac{23}{12})_k}\\frac{3k+2}{4^k}");
    add("thm-2.5-ex2", closed(q(1, 6), 0, q(1, 12), 0, 1),
        spec({{q(5, 6), 0}, {q(7, 6), 0}},
             {{q(3, 2), 0}, {q(11, 12), 0}, {q(13, 12), 0}}, {{0}}, {{3, Rat(1)}},
             q(1, 4), Rat(1), 1),
        "sum_{k>=1} (1)_k(5/6)_k(7/6)_k/((3/2)_k(11/12)_k(13/12)_k)*(3k+1)/4^k = pi/(12*(2-sqrt(3)))",
        "\\frac{\\pi}{12(2-\\sqrt{3})}=\\sum_{k=1}^{\\infty}\\frac{(1)_k(\\frac{5}{6})_k(\\frac{7}{6})_k}"
        "{(\\frac{3}{2})_k(\\frac{11}{12})_k(\\frac{13}{12})_k}\\frac{3k+1}{4^k}");
    add("thm-2.6-ex1", closed(q(35, 6), 0, q(-35, 12), 0, 1),
        spec({{q(5, 6), 0}, {q(7, 6), 0}},
             {{q(3, 2), 0}, {q(17, 12), 0}, {q(19, 12), 0}}, {{0}}, {{3, Rat(2)}},
             q(1, 4)),
        "sum_{k>=0} (1)_k(5/6)_k(7/6)_k/((3/2)_k(17/12)_k(19/12)_k)*(3k+2)/4^k = 35*pi/(12*(2+sqrt(3)))",
        "\\frac{35\\pi}{12(2+\\sqrt{3})}=\\sum_{k=0}^{\\infty}\\frac{(1)_k(\\frac{5}{6})_k(\\frac{7}{6})_k}"
        "{(\\frac{3}{2})_k(\\frac{17}{12})_k(\\frac{19}{12})_k}\\frac{3k+2}{4^k}");
    add("thm-2.6-ex2", closed(q(5, 6), 0, q(-5, 12), 0, 1),
        spec({{q(1, 6), 0}, {q(11, 6), 0}},
             {{q(3, 2), 0}, {q(7, 12), 0}, {q(17, 12), 0}}, {{0}}, {{3, Rat(1)}},
             q(1, 4), Rat(1), 1),
        "sum_{k>=1} (1)_k(1/6)_k(11/6)_k/((3/2)_k(7/12)_k(17/12)_k)*(3k+1)/4^k = 5*pi/(12*(2+sqrt(3)))",
        "\\frac{5\\pi}{12(2+\\sqrt{3})}=\\sum_{k=1}^{\\infty}\\frac{(1)_k(\\frac{1}{6})_k(\\frac{11}{6})_k}"
        "{(\\frac{3}{2})_k(\\frac{7}{12})_k(\\frac{17}{12})_k}\\frac{3k+1}{4^k}");
    add("thm-2.7-ex1", closed(q(1, 4), 0, 0, 0, 2),
        spec({}, {{q(3, 2), 0}, {q(3, 2), 0}, {q(3, 2), 0}}, {{0}, {0}, {0}},
             {{3, Rat(2)}}, q(1, 4)),
        "sum_{k>=0} (1)_k^3/(3/2)_k^3*(3k+2)/4^k = pi^2/4",
        "\\frac{\\pi^2}{4}=\\sum_{k=0}^{\\infty}\\frac{(1)_k^3}{(\\frac{3}{2})_k^3}\\frac{3k+2}{4^{k}}");
    add("thm-2.7-ex2", closed(q(1, 12), 0, 0, 0, 2),
        spec({}, {{q(1, 2), 0}, {q(1, 2), 0}, {q(3, 2), 0}}, {{0}, {0}, {0}},
             {{1, Rat(0)}}, q(1, 4), Rat(1), 2),
        "sum_{k>=2} (1)_k^3/((1/2)_k^2(3/2)_k)*k/4^k = pi^2/12",
        "\\frac{\\pi^2}{12}=\\sum_{k=2}^{\\infty}\\frac{(1)_k^3}{(\\frac{1}{2})_k^2(\\frac{3}{2})_k}\\frac{k}{4^{k}}");
    add("surprising", closed(q(1, 2), 0, 0, 0, 1),
        spec({{q(1, 2), 0}}, {{q(4, 3), 0}, {q(5, 3), 0}}, {{0}}, {{5, Rat(3)}},
             q(2, 27), q(1, 2)),
        "sum_{k>=0} k!(2k)!/(3k+2)!*(5k+3)/2^k = pi/2",
        "\\frac{\\pi}{2}=\\sum_{k=0}^{\\infty}\\frac{k!(2k)!}{(3k+2)!}\\frac{5k+3}{2^k}");

    return g;
}

}  // namespace detail

inline const std::vector<GoldenSeries>& golden_series() {
    static const std::vector<GoldenSeries> gold = detail::build_goldens();
    return gold;
}

inline const GoldenSeries& golden(const std::string& label) {
    for (const auto& g : golden_series())
        if (g.label == label) return g;
    throw unknown_family_error(label);
}

}  // namespace piforms::catalog
