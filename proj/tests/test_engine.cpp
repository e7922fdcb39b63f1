#include <catch2/catch_amalgamated.hpp>

#include "piforms/engine/verify.hpp"

using namespace piforms;
using namespace piforms::engine;
using exactnum::Rat;
using exactnum::rat;

namespace {

ConcreteSeries golden_as_series(const char* label) {
    const auto& g = catalog::golden(label);
    ConcreteSeries s;
    s.term = g.term;
    s.lhs = g.lhs;
    s.prefactor = Rat(1);
    s.family_id = g.label;
    return s;
}

}  // namespace

TEST_CASE("geometric strategy on the k!/(2k+1)!! series", "[engine]") {
    EvalReport r = evaluate_series(golden_as_series("eq-1"), 30);
    CHECK(r.strategy == Strategy::geometric);
    CHECK(r.rigorous);
    CHECK(r.terms_used >= 80);
    CHECK(r.terms_used <= 200);
    CHECK(r.value.to_string().substr(0, 32) == "1.570796326794896619231321691639");
    // the stated bound really brackets pi/2
    exactnum::FixedReal pi = exactnum::pi_reference(r.value.precision());
    Rat err = exactnum::abs(r.value.midpoint() - pi.midpoint() / 2);
    CHECK(err <= r.error_bound + rat(1, exactnum::pow10(30)));
}

TEST_CASE("geometric strategy handles a degenerate single-term series", "[engine]") {
    ConcreteSeries s;
    s.term.scale = rat(5, 1);
    s.term.geo_base = Rat(0);
    s.family_id = "degenerate";
    EvalReport r = evaluate_series(s, 20);
    CHECK(r.value.midpoint() == 5);
    CHECK(r.rigorous);
}

TEST_CASE("alternating acceleration with mandatory cross-check", "[engine]") {
    auto s = catalog::instantiate("chu", {0, 0, 0});
    EvalReport r = evaluate_series(s, 25);
    CHECK(r.strategy == Strategy::alternating_accel);
    CHECK_FALSE(r.rigorous);
    CHECK(r.terms_used <= 60);
    CHECK(r.crosscheck_digits >= 5);
    // value is 2/pi to 25 digits
    exactnum::FixedReal pi = exactnum::pi_reference(r.value.precision());
    Rat err = exactnum::abs(r.value.midpoint() - 2 / pi.midpoint());
    CHECK(err < rat(1, exactnum::pow10(25)));
}

TEST_CASE("alternating partial sums bracket the accelerated value", "[engine]") {
    auto s = catalog::instantiate("chu", {0, 0, 0});
    EvalReport r = evaluate_series(s, 20);
    Rat partial(0);
    Rat term = hyperterm::term_value(s.term, 0);
    bool bracketed = true;
    for (long k = 0; k < 30; ++k) {
        partial += term;
        Rat next = partial + hyperterm::term_ratio(s.term, k) * term;
        Rat lo = partial < next ? partial : next;
        Rat hi = partial < next ? next : partial;
        if (r.value.midpoint() < lo || r.value.midpoint() > hi) bracketed = false;
        term *= hyperterm::term_ratio(s.term, k);
    }
    CHECK(bracketed);
}

TEST_CASE("alternating guard rejects growing terms", "[engine]") {
    ConcreteSeries s;
    s.term.poly_num = {{1, Rat(1)}};  // k+1, growing
    s.term.geo_base = Rat(-1);
    s.family_id = "growing-alternating";
    CHECK_THROWS_AS(evaluate_series(s, 10), inconclusive_error);
}

TEST_CASE("direct partial summation with certified tail bracket", "[engine]") {
    auto s = catalog::instantiate("thm-3.a", {1, 0, 0, 0});
    EvalReport r = evaluate_series(s, 20);
    CHECK(r.strategy == Strategy::direct_partial);
    CHECK(r.crosscheck_digits >= 4);
    exactnum::FixedReal pi = exactnum::pi_reference(r.value.precision());
    Rat err = exactnum::abs(s.prefactor * r.value.midpoint() - 4 / pi.midpoint());
    CHECK(err < rat(1, exactnum::pow10(20)));
}

TEST_CASE("verification of named instances", "[engine]") {
    CHECK(verify("thm-2.1", {1, 0}, 30).verdict == Verdict::verified);
    CHECK(verify("thm-2.7", {2, 1, 1}, 30).verdict == Verdict::verified);
    CHECK(verify("liu", {1, 0, 0, 0}, 20).verdict == Verdict::verified);
    CHECK(verify("thm-3.hh", {1, 0, 0}, 20).verdict == Verdict::verified);
}

TEST_CASE("monotone refinement", "[engine]") {
    for (long d : {15l, 25l, 35l})
        CHECK(verify("thm-2.3", {1, 1, 0}, d).verdict == Verdict::verified);
}

TEST_CASE("reduction coherence: family instance and golden agree digit-for-digit",
          "[engine]") {
    VerifyReport fam = verify("thm-2.1", {0, 0}, 25);
    VerifyReport gold = verify_golden(catalog::golden("eq-1"), 25);
    REQUIRE(fam.rhs_value.has_value());
    REQUIRE(gold.rhs_value.has_value());
    CHECK(fam.rhs_value->mantissa() == gold.rhs_value->mantissa());
    CHECK(fam.verdict == Verdict::verified);
    CHECK(gold.verdict == Verdict::verified);
}

TEST_CASE("strategy agreement: geometric path vs plain partial summation", "[engine]") {
    for (const char* id : {"thm-2.2", "thm-2.5", "thm-2.7"}) {
        auto s = catalog::instantiate(id, {1, 0, 0});
        EvalReport r = evaluate_series(s, 30);
        REQUIRE(r.strategy == Strategy::geometric);
        // 200 plain terms of a ratio-1/4 series carry far more than 10 digits
        Rat partial(0);
        Rat term = hyperterm::term_value(s.term, s.term.start_index);
        for (long k = s.term.start_index; k < s.term.start_index + 200; ++k) {
            partial += term;
            term *= hyperterm::term_ratio(s.term, k);
        }
        INFO(id);
        CHECK(exactnum::abs(partial - r.value.midpoint()) < rat(1, exactnum::pow10(10)));
    }
}

TEST_CASE("sweep enumeration", "[engine]") {
    CHECK(engine::feasible_tuples(catalog::family("chu"), -1).empty());

    // the only bound-0 tuple hits the removable m=0 singularity and must be
    // reported as a finding, not silently skipped
    auto single = engine::sweep("thm-2.2", 0, 20);
    REQUIRE(single.size() == 1);
    CHECK(single[0].params == std::vector<long>{0, 0, 0});
    CHECK(single[0].verdict == Verdict::failed);

    auto reports = engine::sweep("thm-3.cc", 1, 20);
    CHECK(reports.size() >= 5);
    for (const auto& r : reports) {
        INFO(r.family_id << " " << r.details);
        CHECK(r.verdict == Verdict::verified);
    }
}

TEST_CASE("sweep order is lexicographic", "[engine]") {
    auto tuples = engine::feasible_tuples(catalog::family("thm-3.dd"), 1);
    CHECK(std::is_sorted(tuples.begin(), tuples.end()));
    CHECK(tuples.size() >= 5);
}

TEST_CASE("constraint-passing pole tuples surface as findings", "[engine]") {
    // these parameter choices pass the printed constraints but hit the
    // removable singularity of the (3k+2m)/(k+m) factor at m=0
    auto reports = engine::sweep("thm-2.2", 2, 10);
    long flagged = 0;
    for (const auto& r : reports)
        if (r.verdict == Verdict::failed) {
            CHECK(r.params[0] == 0);
            CHECK(r.details.find("instantiation failure") != std::string::npos);
            ++flagged;
        }
    CHECK(flagged == 15);
}
