#pragma once

// Randomized and exhaustive property suites shared by the unit tests and the
// acceptance runner. Every check is exact; failures carry a reproducible
// description. Seeds are fixed so runs are deterministic.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <bsideal/bsideal.hpp>

namespace props {

struct PropertyResult {
    int cases = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    void check(bool pass, const std::string& what) {
        ++cases;
        if (!pass) failures.push_back(what);
    }
};

inline constexpr std::uint64_t kWeylSeed = 0x9e3779b97f4a7c15ull;
inline constexpr std::uint64_t kParserSeed = 0xd1b54a32d192ed03ull;

inline bsideal::Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    long n = num(rng);
    if (n == 0) n = 1;
    return bsideal::Rational(n, den(rng));
}

// A small operator: a few terms with low exponents, so products stay cheap
// while still exercising every commutation path.
inline bsideal::WeylElement random_operator(const bsideal::Signature& sig,
                                            std::mt19937_64& rng, int terms,
                                            unsigned maxexp) {
    std::uniform_int_distribution<unsigned> ex(0, maxexp);
    bsideal::WeylElement e(sig);
    for (int t = 0; t < terms; ++t) {
        std::vector<unsigned> v(static_cast<std::size_t>(sig.vars()), 0u);
        for (auto& vi : v) vi = ex(rng);
        e.add_term(bsideal::Monomial(std::move(v)), random_rational(rng));
    }
    return e;
}

inline bsideal::MultiPoly random_xpoly(const bsideal::Signature& sig,
                                       std::mt19937_64& rng, int terms,
                                       unsigned maxexp, bool s_vars = false) {
    std::uniform_int_distribution<unsigned> ex(0, maxexp);
    bsideal::MultiPoly p(sig);
    for (int t = 0; t < terms; ++t) {
        bsideal::Monomial m = bsideal::Monomial::unit(sig);
        if (s_vars) {
            for (int j = 0; j < sig.r(); ++j) m[sig.s_index(j)] = ex(rng);
        } else {
            for (int i = 0; i < sig.n(); ++i) m[sig.x_index(i)] = ex(rng);
        }
        p += bsideal::MultiPoly::term(sig, m, random_rational(rng));
    }
    return p;
}

// Defining relations, centrality of s, associativity, distributivity, and
// compatibility of operator products with the twisted module action. Exact,
// >= 1000 cases at the default budget.
inline PropertyResult run_weyl_properties(int rounds = 100,
                                          std::uint64_t seed = kWeylSeed) {
    using namespace bsideal;
    PropertyResult res;
    std::mt19937_64 rng(seed);

    for (int round = 0; round < rounds; ++round) {
        std::uniform_int_distribution<int> nd(1, 3), rd(1, 2), coin(0, 1);
        int n = nd(rng), r = rd(rng);
        Signature sig = Signature::make(n, r, /*extended=*/coin(rng) == 1);

        // Relations: for every coordinate pair, d_i x_j = x_j d_i + [i == j].
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                WeylElement di = WeylElement::var(sig, sig.dx_index(i));
                WeylElement xj = WeylElement::var(sig, sig.x_index(j));
                WeylElement lhs = weyl_mul(di, xj);
                WeylElement rhs = weyl_mul(xj, di);
                if (i == j) rhs += WeylElement::one(sig);
                res.check(lhs == rhs, "defining relation at n=" + std::to_string(n) +
                                          " i=" + std::to_string(i) +
                                          " j=" + std::to_string(j));
            }

        // Centrality: s_j commutes with a random operator.
        WeylElement a = random_operator(sig, rng, 3, 2);
        for (int j = 0; j < r; ++j) {
            WeylElement sj = WeylElement::var(sig, sig.s_index(j));
            res.check(weyl_mul(sj, a) == weyl_mul(a, sj),
                      "s-centrality round " + std::to_string(round));
        }

        // Associativity and distributivity on random triples.
        WeylElement b = random_operator(sig, rng, 3, 2);
        WeylElement c = random_operator(sig, rng, 3, 2);
        res.check(weyl_mul(weyl_mul(a, b), c) == weyl_mul(a, weyl_mul(b, c)),
                  "associativity round " + std::to_string(round));
        res.check(weyl_mul(a, b + c) == weyl_mul(a, b) + weyl_mul(a, c),
                  "left distributivity round " + std::to_string(round));
        res.check(weyl_mul(a + b, c) == weyl_mul(a, c) + weyl_mul(b, c),
                  "right distributivity round " + std::to_string(round));
    }

    // Module-action compatibility: (P*Q) . N = P . (Q . N) on twisted modules
    // over a few concrete tuples, with operators in the plain signature.
    std::vector<std::vector<std::string>> tuples = {{"x"}, {"x^2"}, {"x", "y"},
                                                    {"x", "x + y"}};
    for (auto& polys : tuples) {
        InputTuple F = parse_tuple(polys);
        const Signature& sig = F.signature();
        MultiIndex ones(static_cast<std::size_t>(F.r()), 1u);
        for (int round = 0; round < 25; ++round) {
            WeylElement p = random_operator(sig, rng, 2, 2);
            WeylElement q = random_operator(sig, rng, 2, 2);
            TwistedElement nfs = TwistedElement::fs(F);
            TwistedElement npow = TwistedElement::power_product(F, ones);
            for (const TwistedElement* N : {&nfs, &npow}) {
                TwistedElement lhs = weyl_apply_twisted(weyl_mul(p, q), F, *N);
                TwistedElement rhs = weyl_apply_twisted(p, F, weyl_apply_twisted(q, F, *N));
                res.check(TwistedElement::equal(F, lhs, rhs),
                          "action compatibility on " + F.str() + " round " +
                              std::to_string(round));
            }
        }
    }
    return res;
}

namespace detail {

inline std::pair<bsideal::Monomial, bsideal::Rational> lead_of(
    const bsideal::WeylElement& f, const bsideal::TermOrder& ord) {
    auto best = f.terms().begin();
    for (auto it = std::next(best); it != f.terms().end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

}  // namespace detail

// Groebner soundness on every corpus basis: the basis lies in the ideal's
// reduction closure (each input generator reduces to zero), and Buchberger's
// criterion holds (every S-polynomial of basis elements reduces to zero).
inline PropertyResult run_gb_properties(const bsideal::Budget& budget = {}) {
    using namespace bsideal;
    PropertyResult res;
    std::vector<std::string> seen;
    for (const auto& entry : corpus()) {
        // The annihilator ideal only depends on the tuple, not on the shift.
        std::string key;
        for (auto& p : entry.polys) key += p + "|";
        bool dup = false;
        for (auto& s : seen) dup = dup || s == key;
        if (dup) continue;
        seen.push_back(key);

        InputTuple F = parse_tuple(entry.polys);
        std::vector<WeylElement> gens = malgrange_ideal(F);
        TermOrder order = TermOrder::grevlex(F.extended_signature());
        GroebnerBasis G = left_buchberger(gens, order, budget);

        for (std::size_t k = 0; k < gens.size(); ++k)
            res.check(left_normal_form(gens[k], G).is_zero(),
                      "generator " + std::to_string(k) + " of " + entry.name +
                          " does not reduce to zero");

        for (std::size_t i = 0; i < G.elements.size(); ++i)
            for (std::size_t j = i + 1; j < G.elements.size(); ++j) {
                auto [mi, ci] = detail::lead_of(G.elements[i], order);
                auto [mj, cj] = detail::lead_of(G.elements[j], order);
                Monomial l = Monomial::lcm(mi, mj);
                WeylElement spair =
                    weyl_mul(WeylElement::term(order.signature(), l / mi, ci.inverse()),
                             G.elements[i]) -
                    weyl_mul(WeylElement::term(order.signature(), l / mj, cj.inverse()),
                             G.elements[j]);
                res.check(left_normal_form(spair, G).is_zero(),
                          "S-pair (" + std::to_string(i) + "," + std::to_string(j) +
                              ") of " + entry.name + " does not reduce to zero");
            }
    }
    return res;
}

// Integer translates of a hyperplane hit the same point on the unit circle:
// exp_image(a, b) = exp_image(a, b + gcd(a) * k).
inline PropertyResult run_exp_invariance() {
    using namespace bsideal;
    PropertyResult res;
    std::vector<std::vector<Integer>> dirs = {{1},      {2},       {6},      {1, 1},
                                              {2, 4},   {3, 6},    {5, 10},  {1, 2, 3},
                                              {2, 4, 6}, {7, 14, 21}};
    for (auto& a : dirs) {
        Integer g = 0;
        for (auto& ai : a) g = gcd(g, ai);
        for (long base : {1L, 7L, 31L, 64L}) {
            Integer b = Integer(base) + 6 * g;  // keeps every translate positive
            TorsionSubtorus t0 = exp_image(HyperplaneComponent(a, b));
            for (long k = -5; k <= 5; ++k) {
                TorsionSubtorus tk = exp_image(HyperplaneComponent(a, b + g * k));
                res.check(t0 == tk, "exp translate a=" + HyperplaneComponent(a, b).str() +
                                        " k=" + std::to_string(k));
            }
        }
    }
    return res;
}

// parse(str(p)) == p for generated polynomials, both x- and s-sided.
inline PropertyResult run_parser_roundtrip(int cases = 100,
                                           std::uint64_t seed = kParserSeed) {
    using namespace bsideal;
    PropertyResult res;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> nd(1, 3), rd(1, 2), td(0, 6);
    for (int i = 0; i < cases; ++i) {
        Signature sig = Signature::make(nd(rng), rd(rng));
        bool s_side = i % 3 == 2;
        MultiPoly p = random_xpoly(sig, rng, td(rng), 5, s_side);
        MultiPoly q = s_side ? parse_spoly(p.str(), sig) : parse_poly(p.str(), sig);
        res.check(q == p, "round-trip failed for '" + p.str() + "'");
    }
    return res;
}

}  // namespace props
