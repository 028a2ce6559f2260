#include <catch2/catch_amalgamated.hpp>

#include <bsideal/groebner.hpp>
#include <bsideal/jobs.hpp>
#include <bsideal/parser.hpp>
#include <bsideal/pipeline.hpp>

using namespace bsideal;

namespace {
const Signature kSig = Signature::make(1, 1);
WeylElement X() { return WeylElement::var(kSig, kSig.x_index(0)); }
WeylElement D() { return WeylElement::var(kSig, kSig.dx_index(0)); }
WeylElement Sv() { return WeylElement::var(kSig, kSig.s_index(0)); }
}  // namespace

TEST_CASE("left basis of <x d - s, x> contains the hidden constant", "[groebner]") {
    // d*x = x*d + 1, so s + 1 = d*x - (x*d - s) lies in the left ideal even
    // though no generator shows it.
    std::vector<WeylElement> gens = {weyl_mul(X(), D()) - Sv(), X()};
    GroebnerBasis G = left_buchberger(gens, TermOrder::grevlex(kSig));
    REQUIRE(G.elements.size() == 2);
    CHECK(ideal_member(Sv() + WeylElement::one(kSig), G));
    CHECK(ideal_member(X(), G));
    CHECK(ideal_member(weyl_mul(D(), X()).scaled(7), G));
    CHECK_FALSE(ideal_member(D(), G));
    CHECK_FALSE(ideal_member(WeylElement::one(kSig), G));

    bool saw_s_plus_1 = false;
    for (auto& g : G.elements) saw_s_plus_1 = saw_s_plus_1 || g == Sv() + WeylElement::one(kSig);
    CHECK(saw_s_plus_1);
}

TEST_CASE("normal forms are reduced and linear", "[groebner]") {
    std::vector<WeylElement> gens = {weyl_mul(X(), D()) - Sv(), X()};
    GroebnerBasis G = left_buchberger(gens, TermOrder::grevlex(kSig));
    WeylElement p = weyl_mul(D(), weyl_mul(X(), X())) + Sv();
    WeylElement q = D() + WeylElement::one(kSig);
    WeylElement np = left_normal_form(p, G);
    WeylElement nq = left_normal_form(q, G);
    CHECK(left_normal_form(p + q, G) == np + nq);
    CHECK(left_normal_form(np, G) == np);
    CHECK(left_normal_form(WeylElement::zero(kSig), G).is_zero());
}

TEST_CASE("budgets stop runaway completions loudly", "[groebner]") {
    std::vector<WeylElement> gens = {weyl_mul(X(), D()) - Sv(), X()};
    Budget tight;
    tight.max_pairs = 0;
    CHECK_THROWS_AS(left_buchberger(gens, TermOrder::grevlex(kSig), tight), ResourceError);
    try {
        left_buchberger(gens, TermOrder::grevlex(kSig), tight);
    } catch (const ResourceError& e) {
        CHECK(e.limit() == "pair-count");
    }
}

TEST_CASE("elimination orders split the algebra", "[groebner]") {
    // Eliminating the operator block from <x d - s, x> leaves exactly the
    // s-only part <s + 1>: the b-function extraction in miniature.
    std::uint64_t block = kSig.op_block();
    std::vector<WeylElement> gens = {weyl_mul(X(), D()) - Sv(), X()};
    GroebnerBasis G = left_buchberger(gens, TermOrder::eliminating(kSig, block));
    std::vector<WeylElement> s_only = eliminate_block(G, block);
    REQUIRE(s_only.size() == 1);
    CHECK(s_only[0] == Sv() + WeylElement::one(kSig));

    // A plain grevlex basis certifies no elimination at all.
    GroebnerBasis H = left_buchberger(gens, TermOrder::grevlex(kSig));
    CHECK_THROWS_AS(eliminate_block(H, block), InputError);
}

TEST_CASE("torus-closure projection finds the euler element", "[groebner]") {
    // For f = x the ideal <t - x, d_x + d_t> has weight-zero part generated
    // by x d_x + t d_t + 1.
    InputTuple F = parse_tuple({"x"});
    Signature ext = F.extended_signature();
    std::vector<WeylElement> gens = malgrange_ideal(F);
    GroebnerBasis G = left_buchberger(gens, TermOrder::grevlex(ext));
    std::vector<int> w(static_cast<std::size_t>(ext.vars()), 0);
    w[static_cast<std::size_t>(ext.t_index(0))] = 1;
    w[static_cast<std::size_t>(ext.dt_index(0))] = -1;
    std::vector<WeylElement> zero_part = weight_zero_part(G, w);
    REQUIRE(zero_part.size() == 1);
    WeylElement euler = weyl_mul(WeylElement::var(ext, ext.x_index(0)),
                                 WeylElement::var(ext, ext.dx_index(0))) +
                        weyl_mul(WeylElement::var(ext, ext.t_index(0)),
                                 WeylElement::var(ext, ext.dt_index(0))) +
                        WeylElement::one(ext);
    CHECK(zero_part[0] == euler);
}

TEST_CASE("inadmissible orders are rejected", "[groebner]") {
    CHECK_THROWS_AS(TermOrder(kSig, {{-1, 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(TermOrder(kSig, {{1, 0}}), std::invalid_argument);
}
