#include <catch2/catch_amalgamated.hpp>

#include <bsideal/rational.hpp>

using namespace bsideal;

TEST_CASE("rationals are canonical and exact", "[rational]") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-6, -9) == Rational(2, 3));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 2).num() == 1);
    CHECK(Rational(1, 2).den() == 2);
    CHECK(Rational(-1, 2).num() == -1);
    CHECK(Rational(-1, 2).den() == 2);
}

TEST_CASE("rational arithmetic has no drift", "[rational]") {
    Rational third(1, 3);
    Rational sum(0);
    for (int i = 0; i < 3000; ++i) sum += third;
    CHECK(sum == Rational(1000));

    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(7, 3) - Rational(1, 3) == Rational(2));
    CHECK(Rational(3, 4).inverse() == Rational(4, 3));
    CHECK((-Rational(3, 4)) == Rational(-3, 4));
}

TEST_CASE("rational ordering", "[rational]") {
    CHECK(Rational(-1) < Rational(-1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(5, 6) < Rational(7, 6));
    CHECK(Rational(1, 3) <= Rational(1, 3));
    CHECK(Rational(2) > Rational(1, 2));
}

TEST_CASE("rational strings round-trip", "[rational]") {
    for (const char* s : {"0", "1", "-1", "3/4", "-7/5", "22"}) {
        Rational q = Rational::from_string(s);
        CHECK(q.str() == s);
        CHECK(Rational::from_string(q.str()) == q);
    }
    CHECK(Rational::from_string("4/6") == Rational(2, 3));
}

TEST_CASE("rational predicates", "[rational]") {
    CHECK(Rational(0).is_zero());
    CHECK(Rational(1).is_one());
    CHECK(Rational(5).is_integer());
    CHECK_FALSE(Rational(5, 2).is_integer());
}

TEST_CASE("integer helpers", "[rational]") {
    CHECK(gcd(Integer(12), Integer(18)) == 6);
    CHECK(gcd(Integer(0), Integer(7)) == 7);
    CHECK(lcm(Integer(4), Integer(6)) == 12);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(10, 0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(exact_div(Integer(42), Integer(7)) == 6);

    // Values past 64 bits stay exact.
    Integer big = factorial(30);
    CHECK(big == Integer("265252859812191058636308480000000"));
}
