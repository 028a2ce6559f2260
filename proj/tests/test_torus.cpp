#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <bsideal/parser.hpp>
#include <bsideal/torus.hpp>

using namespace bsideal;

namespace {

const Signature kS1({"x"}, 1, false);
const Signature kS2({"x", "y"}, 2, false);

InputTuple tuple1() { return InputTuple(kS1, {parse_poly("x", kS1)}); }
InputTuple tuple2() {
    return InputTuple(kS2, {parse_poly("x", kS2), parse_poly("y", kS2)});
}

BSIdeal make_ideal(const Signature& sig, const InputTuple& F, const MultiIndex& m,
                   const std::vector<std::string>& gens) {
    std::vector<MultiPoly> ps;
    for (auto& g : gens) ps.push_back(parse_spoly(g, sig));
    return BSIdeal{F, m, std::move(ps)};
}

}  // namespace

TEST_CASE("linear factors become hyperplane components", "[torus]") {
    SECTION("one variable") {
        auto dec = locus_components(make_ideal(kS1, tuple1(), {1}, {"(s + 1)*(2*s + 1)"}));
        CHECK(dec.unresolved.empty());
        REQUIRE(dec.components.size() == 2);
        CHECK(dec.components[0] == HyperplaneComponent({Integer(1)}, Integer(1)));
        CHECK(dec.components[1] == HyperplaneComponent({Integer(2)}, Integer(1)));
    }
    SECTION("two variables") {
        auto dec =
            locus_components(make_ideal(kS2, tuple2(), {1, 1}, {"(s1 + 1)*(s2 + 1)"}));
        CHECK(dec.unresolved.empty());
        REQUIRE(dec.components.size() == 2);
        CHECK(dec.components[0] == HyperplaneComponent({Integer(0), Integer(1)}, Integer(1)));
        CHECK(dec.components[1] == HyperplaneComponent({Integer(1), Integer(0)}, Integer(1)));
    }
    SECTION("an irreducible quadratic stays unresolved") {
        auto dec = locus_components(make_ideal(kS1, tuple1(), {1}, {"s^2 + 1"}));
        CHECK(dec.components.empty());
        REQUIRE(dec.unresolved.size() == 1);
        CHECK(dec.unresolved[0] == parse_spoly("s^2 + 1", kS1));
    }
    SECTION("mixed factor lists split into both buckets") {
        auto dec = locus_components(make_ideal(kS1, tuple1(), {1}, {"(s + 1)*(s^2 + 1)"}));
        CHECK(dec.components.size() == 1);
        REQUIRE(dec.unresolved.size() == 1);
        CHECK(dec.unresolved[0] == parse_spoly("s^2 + 1", kS1));
    }
    SECTION("several generators contribute their common factors") {
        auto dec = locus_components(make_ideal(
            kS2, tuple2(), {1, 1}, {"(s1 + 1)*(s2 + 1)", "(s1 + 1)*(s1 + s2 + 2)"}));
        REQUIRE(dec.components.size() == 1);
        CHECK(dec.components[0] == HyperplaneComponent({Integer(1), Integer(0)}, Integer(1)));
        CHECK(dec.unresolved.size() == 2);
    }
}

TEST_CASE("component strings are stable", "[torus]") {
    CHECK(HyperplaneComponent({Integer(6)}, Integer(5)).str() == "6*s + 5");
    CHECK(HyperplaneComponent({Integer(1), Integer(1)}, Integer(2)).str() ==
          "s1 + s2 + 2");
    CHECK(TorsionSubtorus({Integer(1)}, Rational(1, 2)).str() == "{t = -1}");
    CHECK(TorsionSubtorus({Integer(1), Integer(1)}, Rational(0)).str() == "{t1*t2 = 1}");
    CHECK(TorsionSubtorus({Integer(1)}, Rational(1, 6)).str() ==
          "{t = exp(2*pi*i*1/6)}");
}

TEST_CASE("exponential image of hyperplanes", "[torus]") {
    SECTION("2s + 1 maps to the minus-one point") {
        TorsionSubtorus t = exp_image(HyperplaneComponent({Integer(2)}, Integer(1)));
        CHECK(t.direction() == std::vector<Integer>{Integer(1)});
        CHECK(t.theta() == Rational(1, 2));
    }
    SECTION("integer offsets on a primitive direction land at 1") {
        TorsionSubtorus t = exp_image(HyperplaneComponent({Integer(1), Integer(1)}, Integer(2)));
        CHECK(t.theta().is_zero());
    }
    SECTION("6s + 5 keeps the sixth root of unity") {
        CHECK(exp_image(HyperplaneComponent({Integer(6)}, Integer(5))).theta() ==
              Rational(1, 6));
    }
    SECTION("translating b by multiples of gcd(a) does not move the image") {
        for (long k = -5; k <= 5; ++k) {
            Integer b = Integer(7) + Integer(6) * Integer(k);
            if (b <= 0) continue;  // offsets are positive by construction
            CHECK(exp_image(HyperplaneComponent({Integer(6)}, b)) ==
                  exp_image(HyperplaneComponent({Integer(6)}, Integer(7))));
        }
    }
}

TEST_CASE("support locus union and equality", "[torus]") {
    TorsionSubtorus a({Integer(1), Integer(0)}, Rational(0));
    TorsionSubtorus b({Integer(0), Integer(1)}, Rational(0));
    SupportLocus u(2, {a});
    SupportLocus v(2, {a, b});
    CHECK(locus_union(u, v).components().size() == 2);
    CHECK(locus_equal(locus_union(u, v), SupportLocus(2, {b, a})));
    TorsionSubtorus diag({Integer(1), Integer(1)}, Rational(0));
    TorsionSubtorus diag_half({Integer(1), Integer(1)}, Rational(1, 2));
    CHECK_FALSE(locus_equal(SupportLocus(2, {diag}), SupportLocus(2, {diag_half})));
    CHECK_THROWS_AS(locus_union(SupportLocus(1, {}), SupportLocus(2, {})), InputError);
}

TEST_CASE("structure report on resolved ideals", "[torus]") {
    SECTION("classical one-variable data passes") {
        auto rep = check_structure(make_ideal(kS1, tuple1(), {1}, {"(s + 1)*(s + 1/2)"}), {1});
        CHECK(rep.passed);
    }
    SECTION("coordinate pair passes") {
        auto rep =
            check_structure(make_ideal(kS2, tuple2(), {1, 1}, {"(s1 + 1)*(s2 + 1)"}), {1, 1});
        CHECK(rep.passed);
    }
    SECTION("a component off the support of m fails the shape check") {
        auto rep = check_structure(make_ideal(kS2, tuple2(), {0, 1}, {"s1 + 1"}), {0, 1});
        CHECK_FALSE(rep.passed);
        CHECK_FALSE(rep.components_ok);
    }
    SECTION("unresolved factors that are integer translates are flagged as such") {
        auto B = make_ideal(kS2, tuple2(), {1, 1},
                            {"(s1 + s2 + 1)*(s1 + s2 - 3)^2",
                             "(s1 + s2 + 1)*(s1 + s2 - 3)^3"});
        auto dec = locus_components(B);
        CHECK(dec.components.size() == 1);
        CHECK(dec.unresolved.size() == 2);
        auto rep = check_structure(B, {1, 1});
        CHECK(rep.translations_ok);
    }
}

TEST_CASE("diagonal specialization of a support locus", "[torus]") {
    SECTION("the antidiagonal circle meets the diagonal twice") {
        SupportLocus L(2, {TorsionSubtorus({Integer(1), Integer(1)}, Rational(0))});
        auto d = diagonal_specialization(L, {1, 1});
        CHECK_FALSE(d.whole_circle);
        CHECK(d.angles == std::vector<Rational>{Rational(0), Rational(1, 2)});
    }
    SECTION("coordinate circles meet it once each") {
        SupportLocus L(2, {TorsionSubtorus({Integer(1), Integer(0)}, Rational(0)),
                           TorsionSubtorus({Integer(0), Integer(1)}, Rational(0))});
        auto d = diagonal_specialization(L, {1, 1});
        CHECK(d.angles == std::vector<Rational>{Rational(0)});
    }
}

TEST_CASE("exponential support locus of an ideal", "[torus]") {
    SECTION("cusp b-function gives three angles") {
        SupportLocus L =
            exp_locus(make_ideal(kS1, tuple1(), {1}, {"(s + 1)*(s + 5/6)*(s + 7/6)"}));
        REQUIRE(L.components().size() == 3);
        std::vector<Rational> thetas;
        for (auto& c : L.components()) thetas.push_back(c.theta());
        CHECK(thetas == std::vector<Rational>{Rational(0), Rational(1, 6), Rational(5, 6)});
    }
    SECTION("unresolved input is rejected") {
        CHECK_THROWS_AS(exp_locus(make_ideal(kS1, tuple1(), {1}, {"s^2 + 1"})), InputError);
    }
}
