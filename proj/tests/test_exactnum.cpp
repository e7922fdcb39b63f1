#include <catch2/catch_amalgamated.hpp>

#include "piforms/exactnum/fixed_real.hpp"
#include "piforms/exactnum/pi_oracle.hpp"

using namespace piforms::exactnum;

TEST_CASE("rational arithmetic is exact and canonical", "[exactnum]") {
    CHECK(rat(1, 3) + rat(2, 15) == rat(7, 15));
    Rat x = rat(-22, 7);
    CHECK(x * 1 == x);
    CHECK_THROWS_AS(checked_div(Rat(1), Rat(2) - Rat(2)), zero_division_error);

    // round trips on a few fixed samples
    Rat samples[] = {rat(3, 7), rat(-11, 13), rat(100003, 999), Rat(0), rat(1, 1000000)};
    for (const Rat& a : samples)
        for (const Rat& b : samples) {
            CHECK((a + b) - b == a);
            if (b != 0) CHECK(checked_div(a * b, b) == a);
        }
}

TEST_CASE("rational helpers", "[exactnum]") {
    CHECK(pow10(3) == 1000);
    CHECK(ipow(Int(3), 4) == 81);
    CHECK(rat_pow(rat(2, 3), 3) == rat(8, 27));
    CHECK(rat_pow(rat(2, 3), -2) == rat(9, 4));
    CHECK(factorial(5) == 120);
    CHECK(factorial(0) == 1);
    CHECK(abs(rat(-3, 4)) == rat(3, 4));
}

TEST_CASE("fixed-point conversion tracks one ulp", "[exactnum]") {
    FixedReal t = FixedReal::from_rational(rat(1, 3), 5);
    CHECK(t.mantissa() == 33333);
    CHECK(t.err_ulp() <= 1);

    FixedReal u = FixedReal::from_rational(rat(22, 15), 10);
    CHECK(u.to_string().substr(0, 11) == "1.466666666");
    CHECK(abs(u.midpoint() - rat(22, 15)) <= rat(1, pow10(10)));
    CHECK(u.err_ulp() <= 1);

    FixedReal z = FixedReal::from_rational(Rat(0), 7);
    CHECK(z.mantissa() == 0);
    CHECK(z.err_ulp() == 0);
}

TEST_CASE("fixed-point conversion is monotone within 2 ulp", "[exactnum]") {
    Rat xs[] = {rat(-5, 3), rat(-1, 7), Rat(0), rat(1, 9), rat(1, 9) + rat(1, 100000),
                rat(355, 113)};
    for (size_t i = 0; i + 1 < std::size(xs); ++i) {
        FixedReal a = FixedReal::from_rational(xs[i], 8);
        FixedReal b = FixedReal::from_rational(xs[i + 1], 8);
        CHECK(a.mantissa() <= b.mantissa() + 2);
    }
}

TEST_CASE("fixed-point interval arithmetic brackets the true value", "[exactnum]") {
    FixedReal a = FixedReal::from_rational(rat(1, 3), 20);
    FixedReal b = FixedReal::from_rational(rat(1, 7), 20);
    FixedReal s = a + b;
    Rat truth = rat(1, 3) + rat(1, 7);
    CHECK(abs(s.midpoint() - truth) <= s.err_ulp() * rat(1, pow10(20)));
    FixedReal p = a * b;
    CHECK(abs(p.midpoint() - rat(1, 21)) <= p.err_ulp() * rat(1, pow10(20)));
    FixedReal q = a / b;
    CHECK(abs(q.midpoint() - rat(7, 3)) <= q.err_ulp() * rat(1, pow10(20)));
}

TEST_CASE("integer square roots", "[exactnum]") {
    FixedReal two = fixed_sqrt(4, 15);
    CHECK(two.midpoint() == 2);
    CHECK(two.err_ulp() == 0);

    FixedReal r3 = fixed_sqrt(3, 10);
    CHECK(r3.to_string().substr(0, 12) == "1.7320508075");
    CHECK(abs(r3.midpoint() * r3.midpoint() - 3) <= rat(4, pow10(10)));

    FixedReal r2 = fixed_sqrt(2, 10);
    Rat sq = r2.midpoint() * r2.midpoint();
    CHECK(abs(sq - 2) <= rat(4, pow10(10)));

    for (long n : {2l, 3l, 6l}) {
        FixedReal r = fixed_sqrt(n, 25);
        CHECK(abs(r.midpoint() * r.midpoint() - n) <= rat(4, pow10(25)));
    }
}

TEST_CASE("pi oracle agrees with published digits", "[exactnum]") {
    FixedReal pi20 = pi_reference(20);
    CHECK(pi20.to_string().substr(0, 22) == "3.14159265358979323846");
    CHECK(pi20.err_ulp() <= 8);

    FixedReal pi1 = pi_reference(1);
    CHECK(pi1.to_string().substr(0, 3) == "3.1");
}

TEST_CASE("pi oracle refinement is prefix-stable", "[exactnum]") {
    for (long p : {5l, 10l, 50l}) {
        std::string lo = pi_reference(p).to_string();
        std::string hi = pi_reference(p + 10).to_string();
        CHECK(hi.substr(0, p) == lo.substr(0, p));  // p-2 digits after the point
    }
}

TEST_CASE("ln2 oracle", "[exactnum]") {
    FixedReal l = ln2_reference(30);
    CHECK(l.to_string().substr(0, 32) == "0.693147180559945309417232121458");
}

TEST_CASE("guard digit budget grows with step count", "[exactnum]") {
    CHECK(guard_digits(1) >= 10);
    CHECK(guard_digits(1000) >= 13);
    CHECK(guard_digits(1000000) >= guard_digits(1000));
}
