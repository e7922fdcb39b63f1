#pragma once

#include <array>

#include "piforms/hyperterm/pfq.hpp"

namespace piforms::hyperterm {

// Exact terminating checks of the two classical summation identities the
// catalog's closed forms descend from. Both sides are rational at every
// grid point, so the comparisons carry zero tolerance.

// Very well poised 5F4 at z = 1 with d = -s; the remaining parameters must
// keep 1 + a - b - c + s positive.
inline bool dougall_point(const Rat& a, const Rat& b, const Rat& c, long s) {
    Rat d = Rat(-s);
    Rat lhs = pfq_terminating({a, 1 + a / 2, b, c, d},
                              {a / 2, 1 + a - b, 1 + a - c, 1 + a - d}, Rat(1));
    Rat rhs = gamma_quotient_reduce({{1 + a, s},
                                     {1 + a - b - c, s},
                                     {1 + a - b + s, -s},
                                     {1 + a - c + s, -s}});
    return lhs == rhs;
}

// Terminating 7F6 companion at z = 1; closed form is a Pochhammer quotient.
inline bool chu7f6_point(const Rat& a, const Rat& b, const Rat& c, long s) {
    Rat S(s);
    Rat lhs = pfq_terminating(
        {a - exactnum::rat(1, 2), (2 * a + 2) / 3, 2 * b - 1, 2 * c - 1,
         2 + 2 * a - 2 * b - 2 * c, a + S, -S},
        {(2 * a - 1) / 3, 1 + a - b, 1 + a - c, b + c - exactnum::rat(1, 2),
         2 * a + 2 * S, -2 * S},
        Rat(1));
    Rat rhs = exactnum::checked_div(
        pochhammer(exactnum::rat(1, 2) + a, s) * pochhammer(b, s) * pochhammer(c, s) *
            pochhammer(a - b - c + exactnum::rat(3, 2), s),
        pochhammer(exactnum::rat(1, 2), s) * pochhammer(1 + a - b, s) *
            pochhammer(1 + a - c, s) * pochhammer(b + c - exactnum::rat(1, 2), s));
    return lhs == rhs;
}

struct IdentityGridResult {
    long checked = 0;
    long skipped = 0;  // pole at a grid point, recorded rather than failed
    long failed = 0;
};

inline const std::vector<std::array<Rat, 3>>& dougall_grid_points() {
    static const std::vector<std::array<Rat, 3>> pts = [] {
        std::vector<std::array<Rat, 3>> out;
        auto q = [](long n, long d) { return exactnum::rat(n, d); };
        for (const Rat& a : {q(1, 2), Rat(1), q(3, 2), Rat(2), q(5, 2)})
            for (const Rat& b : {q(1, 3), q(1, 2), q(2, 3), q(1, 4)})
                for (const Rat& c : {q(1, 5), q(1, 6), q(2, 7)})
                    out.push_back({a, b, c});
        return out;
    }();
    return pts;
}

inline const std::vector<std::array<Rat, 3>>& chu7f6_grid_points() {
    static const std::vector<std::array<Rat, 3>> pts = [] {
        std::vector<std::array<Rat, 3>> out;
        auto q = [](long n, long d) { return exactnum::rat(n, d); };
        for (const Rat& a : {Rat(2), Rat(3), Rat(4), q(5, 2), q(7, 2)})
            for (const Rat& b : {q(5, 4), q(4, 3), q(3, 2), q(9, 8)})
                for (const Rat& c : {q(7, 4), q(5, 3), q(11, 6)})
                    out.push_back({a, b, c});
        return out;
    }();
    return pts;
}

// Runs every grid point at every s in [0, s_max]. Points where the
// convergence condition 1 + a - b - c + s > 0 fails (Dougall) or where a
// parameter hits a pole are skipped, not failed.
inline IdentityGridResult dougall_grid(long s_max) {
    IdentityGridResult r;
    for (long s = 0; s <= s_max; ++s)
        for (const auto& [a, b, c] : dougall_grid_points()) {
            if (1 + a - b - c + s <= 0) {
                ++r.skipped;
                continue;
            }
            try {
                (dougall_point(a, b, c, s) ? r.checked : r.failed)++;
            } catch (const pole_error&) {
                ++r.skipped;
            } catch (const exactnum::zero_division_error&) {
                ++r.skipped;
            }
        }
    return r;
}

inline IdentityGridResult chu7f6_grid(long s_max) {
    IdentityGridResult r;
    for (long s = 0; s <= s_max; ++s)
        for (const auto& [a, b, c] : chu7f6_grid_points()) {
            try {
                (chu7f6_point(a, b, c, s) ? r.checked : r.failed)++;
            } catch (const pole_error&) {
                ++r.skipped;
            } catch (const exactnum::zero_division_error&) {
                ++r.skipped;
            }
        }
    return r;
}

}  // namespace piforms::hyperterm
