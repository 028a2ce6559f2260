#include <catch2/catch_amalgamated.hpp>

#include <bsideal/jobs.hpp>
#include <bsideal/parser.hpp>
#include <bsideal/pipeline.hpp>
#include <bsideal/weyl.hpp>

using namespace bsideal;

namespace {
const Signature kSig = Signature::make(2, 1);
WeylElement X(int i) { return WeylElement::var(kSig, kSig.x_index(i)); }
WeylElement D(int i) { return WeylElement::var(kSig, kSig.dx_index(i)); }
WeylElement Sv() { return WeylElement::var(kSig, kSig.s_index(0)); }
}  // namespace

TEST_CASE("normal ordering and commutators", "[weyl]") {
    // d x = x d + 1, and mixed pairs commute.
    CHECK(weyl_mul(D(0), X(0)) == weyl_mul(X(0), D(0)) + WeylElement::one(kSig));
    CHECK(weyl_mul(D(0), X(1)) == weyl_mul(X(1), D(0)));
    CHECK(weyl_mul(Sv(), D(0)) == weyl_mul(D(0), Sv()));

    // d^2 x = x d^2 + 2 d.
    WeylElement d2 = weyl_mul(D(0), D(0));
    CHECK(weyl_mul(d2, X(0)) == weyl_mul(X(0), d2) + D(0).scaled(2));

    // d x^3 = x^3 d + 3 x^2 (Leibniz through the normal form).
    WeylElement x3 = WeylElement::var(kSig, kSig.x_index(0), 3);
    WeylElement x2 = WeylElement::var(kSig, kSig.x_index(0), 2);
    CHECK(weyl_mul(D(0), x3) == weyl_mul(x3, D(0)) + x2.scaled(3));
}

TEST_CASE("operators print with d_ tokens", "[weyl]") {
    WeylElement e = weyl_mul(X(0), D(0)).scaled(3) + weyl_mul(X(1), D(1)).scaled(2) -
                    Sv().scaled(6);
    CHECK(e.str() == "3*x*d_x + 2*y*d_y - 6*s");
    CHECK(D(1).str() == "d_y");
}

TEST_CASE("from_poly embeds commutative polynomials", "[weyl]") {
    MultiPoly p = parse_poly("x^2 + y", kSig);
    WeylElement e = WeylElement::from_poly(p);
    CHECK(e.to_poly() == p);
    CHECK(weyl_mul(e, e) == WeylElement::from_poly(p * p));
    CHECK_THROWS_AS(D(0).to_poly(), InputError);
}

TEST_CASE("degree accounting", "[weyl]") {
    WeylElement e = weyl_mul(weyl_mul(X(0), X(0)), D(1)) + Sv().scaled(5);
    CHECK(e.op_degree() == 3);
    CHECK(e.s_degree() == 1);
    CHECK(WeylElement::zero(kSig).op_degree() == -1);
}

TEST_CASE("s substitution rewrites t-pairs", "[weyl]") {
    // In the extended algebra, x d_x + t d_t maps to x d_x - s - 1.
    Signature ext = Signature::make(1, 1, /*extended=*/true);
    WeylElement e = weyl_mul(WeylElement::var(ext, ext.x_index(0)),
                             WeylElement::var(ext, ext.dx_index(0))) +
                    weyl_mul(WeylElement::var(ext, ext.t_index(0)),
                             WeylElement::var(ext, ext.dt_index(0)));
    WeylElement image = substitute_s(e);
    Signature plain = Signature::make(1, 1);
    WeylElement expected = weyl_mul(WeylElement::var(plain, plain.x_index(0)),
                                    WeylElement::var(plain, plain.dx_index(0))) -
                           WeylElement::var(plain, plain.s_index(0)) -
                           WeylElement::one(plain);
    CHECK(image == expected);

    // Unbalanced t-powers have no s-image.
    CHECK_THROWS_AS(substitute_s(WeylElement::var(ext, ext.t_index(0))), InputError);
}

TEST_CASE("functional equation checker", "[weyl]") {
    InputTuple F = parse_tuple({"x"});
    const Signature& sig = F.signature();
    MultiPoly b = parse_spoly("s + 1", sig);
    WeylElement d = WeylElement::var(sig, sig.dx_index(0));

    // (s+1) x^s = d_x . x^(s+1) holds; the twist cannot be faked by b or P.
    CHECK(verifies_functional_equation(F, {1}, b, d));
    CHECK_FALSE(verifies_functional_equation(F, {1}, parse_spoly("s + 2", sig), d));
    CHECK_FALSE(verifies_functional_equation(F, {1}, b, WeylElement::one(sig)));

    // b must be a polynomial in s alone.
    CHECK_THROWS_AS(
        verifies_functional_equation(F, {1}, parse_poly("x", sig), d),
        InputError);
}

TEST_CASE("twisted application differentiates f^s", "[weyl]") {
    // d_x . (x^2+y^2)^s = 2xs (x^2+y^2)^(s-1), checked through the module
    // equality d_x . f*f^s = (f d_x + f_x) . f^s.
    InputTuple F = parse_tuple({"x^2 + y^2"});
    const Signature& sig = F.signature();
    WeylElement d = WeylElement::var(sig, sig.dx_index(0));
    MultiPoly f = F.f(0);
    TwistedElement lhs = weyl_apply_twisted(d, F, TwistedElement::power_product(F, {1}));
    WeylElement rhs_op = weyl_mul(WeylElement::from_poly(f), d) +
                         WeylElement::from_poly(f.derivative(sig.x_index(0)));
    TwistedElement rhs = weyl_apply_twisted(rhs_op, F, TwistedElement::fs(F));
    CHECK(TwistedElement::equal(F, lhs, rhs));
}
