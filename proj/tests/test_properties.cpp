#include <catch2/catch_amalgamated.hpp>

#include "properties.hpp"

// The four randomized/enumerated suites. Seeds are fixed so failures
// reproduce; each suite reports every violated instance it finds.

TEST_CASE("operator algebra identities hold on random elements", "[property]") {
    auto res = props::run_weyl_properties();
    CAPTURE(res.failures);
    CHECK(res.failures.empty());
    CHECK(res.cases >= 1000);
}

TEST_CASE("reduced bases certify themselves", "[property]") {
    auto res = props::run_gb_properties();
    CAPTURE(res.failures);
    CHECK(res.failures.empty());
    CHECK(res.cases >= 100);
}

TEST_CASE("torus images are invariant under admissible translation", "[property]") {
    auto res = props::run_exp_invariance();
    CAPTURE(res.failures);
    CHECK(res.failures.empty());
    CHECK(res.cases >= 100);
}

TEST_CASE("printing and parsing are mutually inverse", "[property]") {
    auto res = props::run_parser_roundtrip();
    CAPTURE(res.failures);
    CHECK(res.failures.empty());
    CHECK(res.cases >= 100);
}
