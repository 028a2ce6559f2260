#pragma once

// The main computation chain: from an input tuple F = (f_1, ..., f_r) to the
// annihilator of prod f_j^{s_j}, the shifted Bernstein-Sato ideals B_F^m, the
// classical b-function (r = 1, m = 1), and the log canonical threshold.
//
// Route for the annihilator: start from the ideal generated by
//   t_j - f_j,
//   d_x_i + sum_j (df_j/dx_i) d_t_j
// in the extended algebra. That ideal is the full annihilator of the formal
// generator the f_j^{s_j} model, take its weight-zero part for the weight
// counting t_j as +1 and d_t_j as -1, and rewrite each balanced t_j d_t_j
// factor through t_j d_t_j -> -s_j - 1. The result generates
// Ann(prod f_j^{s_j}) in D_n[s].
//
// A one-step shortcut that adjoins "pin" generators s_j + d_t_j t_j with a
// central s and eliminates (t, d_t) directly is tempting but unsound in this
// data model: on the underlying module s_j acts exactly as the non-central
// -d_t_j t_j, so with s central those generators force the unit ideal. As a
// safety net, every generator this header returns is re-verified against the
// twisted action before the caller sees it.

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "linear.hpp"
#include "multipoly.hpp"
#include "term_order.hpp"
#include "tuple.hpp"
#include "weyl.hpp"

namespace bsideal {

// Generators {t_j - f_j} and {d_x_i + sum_j (df_j/dx_i) d_t_j} over the
// extended signature; exactly n + r of them, t-relations first.
inline std::vector<WeylElement> malgrange_ideal(const InputTuple& F) {
    Signature ext = F.extended_signature();
    std::vector<WeylElement> gens;
    for (int j = 0; j < F.r(); ++j) {
        WeylElement g = WeylElement::var(ext, ext.t_index(j)) -
                        WeylElement::from_poly(poly_with_signature(F.f(j), ext));
        gens.push_back(std::move(g));
    }
    for (int i = 0; i < F.n(); ++i) {
        WeylElement g = WeylElement::var(ext, ext.dx_index(i));
        for (int j = 0; j < F.r(); ++j) {
            MultiPoly df = F.f(j).derivative(F.signature().x_index(i));
            if (df.is_zero()) continue;
            g += WeylElement::from_poly(poly_with_signature(df, ext)) *
                 WeylElement::var(ext, ext.dt_index(j));
        }
        gens.push_back(std::move(g));
    }
    return gens;
}

namespace detail {

// Canonicalize a generator list: primitive scaling, grevlex-sorted, deduped.
inline std::vector<WeylElement> tidy_generators(std::vector<WeylElement> gens,
                                                const TermOrder& ord) {
    std::vector<WeylElement> out;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        WeylElement z = normalize_primitive(g, ord);
        bool dup = false;
        for (auto& seen : out) dup = dup || seen == z;
        if (!dup) out.push_back(std::move(z));
    }
    std::sort(out.begin(), out.end(), [&](const WeylElement& a, const WeylElement& b) {
        auto la = leading_term(a, ord).first, lb = leading_term(b, ord).first;
        if (int c = ord.compare(la, lb)) return c < 0;
        return false;
    });
    return out;
}

inline void check_annihilates(const std::vector<WeylElement>& gens, const InputTuple& F) {
    TwistedElement fs = TwistedElement::fs(F);
    for (auto& g : gens) {
        if (!weyl_apply_twisted(g, F, fs).is_zero())
            throw std::logic_error("internal error: a reported annihilator fails to kill f^s");
    }
}

}  // namespace detail

// Ann_{D_n[s]}(prod f_j^{s_j}): Groebner basis of the natural system, its
// weight-zero part, then the t_j d_t_j -> -s_j - 1 rewrite. Every returned
// generator is re-verified against the twisted action before the call
// returns, so a wrong generator cannot escape this function.
inline std::vector<WeylElement> annihilator_fs(const InputTuple& F, const Budget& budget = {}) {
    Signature ext = F.extended_signature();
    GroebnerBasis gb = left_buchberger(malgrange_ideal(F), TermOrder::grevlex(ext), budget);
    std::vector<int> w(ext.vars(), 0);
    for (int j = 0; j < F.r(); ++j) {
        w[ext.t_index(j)] = 1;
        w[ext.dt_index(j)] = -1;
    }
    std::vector<WeylElement> out;
    for (auto& g : weight_zero_part(gb, w, budget)) out.push_back(substitute_s(g));
    out = detail::tidy_generators(std::move(out), TermOrder::grevlex(F.signature()));
    detail::check_annihilates(out, F);
    return out;
}

struct BSIdeal {
    InputTuple tuple;
    MultiIndex m;
    // Monic reduced commutative Groebner basis (grevlex on s), ascending.
    std::vector<MultiPoly> generators;

    std::string str() const {
        std::string out = "<";
        for (std::size_t i = 0; i < generators.size(); ++i) {
            if (i) out += ", ";
            out += generators[i].str();
        }
        return out + ">";
    }
};

// B_F^m = { b(s) : b * prod f_j^{s_j} lies in D_n[s] * prod f_j^{s_j + m_j} },
// i.e. the s-polynomials b admitting an operator P with
//   b(s) prod f_j^{s_j} = P prod f_j^{s_j + m_j}.
// Computed as (Ann(f^s) + D_n[s] * prod f^m) intersected with Q[s] by
// eliminating the (x, d_x) block.
inline BSIdeal bs_ideal(const InputTuple& F, const MultiIndex& m, const Budget& budget = {}) {
    MultiPoly fm = F.power_product(m);  // validates m
    if (fm.is_constant())
        throw InputError("every f_i with m_i > 0 is constant; the shifted ideal is undefined");
    const Signature& plain = F.signature();
    auto gens = annihilator_fs(F, budget);
    gens.push_back(WeylElement::from_poly(fm));
    std::uint64_t block = plain.xd_block();
    GroebnerBasis gb = left_buchberger(gens, TermOrder::eliminating(plain, block), budget);
    TermOrder sorder = TermOrder::grevlex(plain);
    std::vector<MultiPoly> out;
    for (auto& g : eliminate_block(gb, block)) {
        Rational lead = detail::leading_term(g, sorder).second;
        out.push_back(g.to_poly().scaled(lead.inverse()));
    }
    if (out.empty())
        throw std::logic_error("internal error: the Bernstein-Sato ideal came back zero");
    return {F, m, std::move(out)};
}

// View a polynomial in x alone as the one-entry tuple (f) over a plain r = 1
// signature with the same x-variables, rebuilding the signature if needed.
inline InputTuple univariate_tuple(const MultiPoly& f) {
    if (f.is_zero() || f.is_constant())
        throw InputError("the b-function needs a non-constant polynomial");
    if (!f.uses_only(f.signature().x_block()))
        throw InputError("the b-function input must be a polynomial in the x-variables");
    Signature plain = f.signature();
    if (plain.extended() || plain.r() != 1) {
        std::vector<std::string> names;
        for (int i = 0; i < plain.n(); ++i) names.push_back(plain.var_name(plain.x_index(i)));
        plain = Signature(names, 1, false);
    }
    return InputTuple(plain, {poly_with_signature(f, plain)});
}

// The classical b-function: monic generator of the r = 1, m = 1 ideal.
inline MultiPoly bfunction(const MultiPoly& f, const Budget& budget = {}) {
    BSIdeal B = bs_ideal(univariate_tuple(f), MultiIndex{1}, budget);
    if (B.generators.size() != 1)
        throw std::logic_error("internal error: univariate ideal with more than one generator");
    return B.generators[0];
}

// Exact membership b in B_F^m, by commutative normal form against the
// reduced basis.
inline bool membership(const MultiPoly& b, const InputTuple& F, const MultiIndex& m,
                       const Budget& budget = {}) {
    const Signature& plain = F.signature();
    require_same_signature(b.signature(), plain);
    if (!b.uses_only(plain.s_block()))
        throw InputError("membership candidates must be polynomials in the s-variables");
    if (b.is_zero()) return true;
    BSIdeal B = bs_ideal(F, m, budget);
    std::vector<WeylElement> gens;
    for (auto& g : B.generators) gens.push_back(WeylElement::from_poly(g));
    return left_normal_form(WeylElement::from_poly(b), gens, TermOrder::grevlex(plain))
        .is_zero();
}

// Log canonical threshold: the negative of the largest root of b_f. By
// rationality and negativity of the roots this is a positive rational; both
// facts are asserted rather than assumed.
inline Rational lct(const MultiPoly& f, const Budget& budget = {}) {
    MultiPoly b = bfunction(f, budget);
    auto roots = univariate_rational_roots(b);
    unsigned found = 0;
    for (auto& [root, mult] : roots) found += mult;
    if (found != b.total_degree())
        throw std::logic_error("internal error: the b-function has a non-rational root");
    Rational top = roots.back().first;
    if (top.sign() >= 0)
        throw std::logic_error("internal error: the b-function has a non-negative root");
    return -top;
}

}  // namespace bsideal
