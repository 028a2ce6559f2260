#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <bsideal/parser.hpp>
#include <bsideal/zeta.hpp>

using namespace bsideal;

namespace {

const Signature kS1({"x"}, 1, false);
const Signature kSxy1({"x", "y"}, 1, false);
const Signature kS2({"x", "y"}, 2, false);

BSIdeal make_ideal(const Signature& sig, const std::vector<std::string>& polys,
                   const MultiIndex& m, const std::vector<std::string>& gens) {
    std::vector<MultiPoly> fs;
    for (auto& p : polys) fs.push_back(parse_poly(p, sig));
    std::vector<MultiPoly> ps;
    for (auto& g : gens) ps.push_back(parse_spoly(g, sig));
    return BSIdeal{InputTuple(sig, fs), m, std::move(ps)};
}

}  // namespace

TEST_CASE("resolution data is validated on construction", "[zeta]") {
    CHECK_THROWS_AS(ResolutionData(0, {}), InputError);
    CHECK_THROWS_AS(ResolutionData(1, {{{Integer(1), Integer(1)}, Integer(1), ""}}),
                    InputError);
    CHECK_THROWS_AS(ResolutionData(1, {{{Integer(-1)}, Integer(1), ""}}), InputError);
    CHECK_THROWS_AS(ResolutionData(1, {{{Integer(1)}, Integer(0), ""}}), InputError);

    // Divisors missing every f_j carry no pole data and are dropped.
    ResolutionData R(2, {{{Integer(0), Integer(0)}, Integer(3), "far away"},
                         {{Integer(1), Integer(0)}, Integer(1), "E1"}});
    CHECK(R.divisors().size() == 1);
    CHECK(R.divisors()[0].label == "E1");
}

TEST_CASE("polar candidates are normalized and deduplicated", "[zeta]") {
    ResolutionData R(1, {{{Integer(2)}, Integer(2), "doubled"},
                         {{Integer(1)}, Integer(1), "strict transform"},
                         {{Integer(6)}, Integer(5), "last chart"}});
    auto cands = polar_candidates(R);
    REQUIRE(cands.size() == 2);
    CHECK(cands[0] == HyperplaneComponent({Integer(1)}, Integer(1)));
    CHECK(cands[1] == HyperplaneComponent({Integer(6)}, Integer(5)));
}

TEST_CASE("cusp resolution candidates sit inside the zero locus", "[zeta]") {
    ResolutionData R(1,
                     {{{Integer(1)}, Integer(1), "strict transform"},
                      {{Integer(2)}, Integer(2), "E1"},
                      {{Integer(3)}, Integer(3), "E2"},
                      {{Integer(6)}, Integer(5), "E3"}},
                     "cusp");
    auto cands = polar_candidates(R);
    REQUIRE(cands.size() == 2);
    CHECK(cands[0] == HyperplaneComponent({Integer(1)}, Integer(1)));
    CHECK(cands[1] == HyperplaneComponent({Integer(6)}, Integer(5)));

    BSIdeal B = make_ideal(kSxy1, {"x^2 + y^3"}, {1}, {"(s + 1)*(s + 5/6)*(s + 7/6)"});
    auto rep = conjecture_check(R, B);
    CHECK(rep.all_contained);
    REQUIRE(rep.contained.size() == 2);
    CHECK(rep.contained[0]);
    CHECK(rep.contained[1]);
}

TEST_CASE("normal crossing pair checks componentwise", "[zeta]") {
    ResolutionData R(2, {{{Integer(1), Integer(0)}, Integer(1), "E1"},
                         {{Integer(0), Integer(1)}, Integer(1), "E2"}});
    BSIdeal B = make_ideal(kS2, {"x", "y"}, {1, 1}, {"(s1 + 1)*(s2 + 1)"});
    auto rep = conjecture_check(R, B);
    CHECK(rep.all_contained);
}

TEST_CASE("candidates outside the locus are reported as candidate-only", "[zeta]") {
    ResolutionData R(1, {{{Integer(2)}, Integer(3), "synthetic"}});
    BSIdeal B = make_ideal(kS1, {"x"}, {1}, {"s + 1"});
    auto rep = conjecture_check(R, B);
    CHECK_FALSE(rep.all_contained);
    REQUIRE(rep.contained.size() == 1);
    CHECK_FALSE(rep.contained[0]);
    REQUIRE_FALSE(rep.notes.empty());
    CHECK(rep.notes[0].find("candidate-only") != std::string::npos);
}

TEST_CASE("conjecture check validates its inputs", "[zeta]") {
    ResolutionData R(1, {{{Integer(1)}, Integer(1), "E"}});
    BSIdeal B2 = make_ideal(kS2, {"x", "y"}, {1, 1}, {"(s1 + 1)*(s2 + 1)"});
    CHECK_THROWS_AS(conjecture_check(R, B2), InputError);

    BSIdeal zero = make_ideal(kS1, {"x"}, {1}, {});
    CHECK_THROWS_AS(conjecture_check(R, zero), InputError);
}
