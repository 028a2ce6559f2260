#pragma once

// Left Groebner bases in the Weyl algebra: Buchberger's completion with the
// normal selection strategy, left normal form, block elimination, and the
// weight-zero filtration step the annihilator pipeline is built on.
//
// Everything is deterministic: pairs are processed smallest-lcm-first with an
// index tiebreak, reducers are chosen first-match in basis order, and bases
// are returned reduced, integer-primitive, sorted by leading monomial.
//
// There is deliberately no product criterion: it is unsound here, since
// "coprime" leading monomials like x and d_x can still produce a nonzero
// S-pair constant through the commutator.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "term_order.hpp"
#include "weyl.hpp"

namespace bsideal {

// Caps on a single Buchberger run. Degrees are total degrees over the
// operator block and the s-block of any element entering the basis or any
// reducer product formed along the way.
struct Budget {
    std::size_t max_pairs = 50000;
    int max_op_degree = 48;
    int max_s_degree = 64;
};

struct GroebnerBasis {
    TermOrder order;
    std::vector<WeylElement> elements;
    bool reduced = false;
};

namespace detail {

inline std::pair<Monomial, Rational> leading_term(const WeylElement& f, const TermOrder& ord) {
    if (f.is_zero()) throw std::invalid_argument("leading term of zero");
    auto it = f.terms().begin();
    const Monomial* m = &it->first;
    const Rational* c = &it->second;
    for (++it; it != f.terms().end(); ++it) {
        if (ord.less(*m, it->first)) {
            m = &it->first;
            c = &it->second;
        }
    }
    return {*m, *c};
}

// Scale to integer coefficients with content 1 and a positive leading
// coefficient. This is the canonical representative we store.
inline WeylElement normalize_primitive(const WeylElement& f, const TermOrder& ord) {
    if (f.is_zero()) return f;
    Integer num_gcd = 0, den_lcm = 1;
    for (auto& [m, c] : f.terms()) {
        num_gcd = gcd(num_gcd, c.num());
        den_lcm = lcm(den_lcm, c.den());
    }
    Rational scale(den_lcm, num_gcd);
    if (leading_term(f, ord).second.sign() < 0) scale = -scale;
    return f.scaled(scale);
}

// mono * f as operators, times a scalar; the workhorse of reduction.
inline WeylElement left_mono_mul(const Monomial& mono, const Rational& c,
                                 const WeylElement& f) {
    WeylElement out(f.signature());
    for (auto& [m, k] : f.terms())
        accumulate_normal_product(out, f.signature(), mono, c, m, k);
    return out;
}

struct MonoDesc {
    const TermOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->less(b, a); }
};

using WorkMap = std::map<Monomial, Rational, MonoDesc>;

inline void work_add(WorkMap& h, const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = h.find(m);
    if (it == h.end()) {
        h.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) h.erase(it);
    }
}

inline void check_product_degree(const Budget* budget, const Signature& sig,
                                 const Monomial& mono, const WeylElement& g) {
    if (!budget) return;
    int op = static_cast<int>(mono.degree_on(sig.op_block())) + std::max(g.op_degree(), 0);
    if (op > budget->max_op_degree)
        throw ResourceError("operator-degree",
                            "a reduction product would reach operator degree " +
                                std::to_string(op));
    int sd = static_cast<int>(mono.degree_on(sig.s_block())) + std::max(g.s_degree(), 0);
    if (sd > budget->max_s_degree)
        throw ResourceError("s-degree",
                            "a reduction product would reach s-degree " + std::to_string(sd));
}

// Full left normal form of f against G (first-match reducer). Terminates
// because each step strictly lowers the leading monomial in a well-order.
inline WeylElement normal_form_impl(const WeylElement& f, const std::vector<WeylElement>& G,
                                    const std::vector<std::pair<Monomial, Rational>>& leads,
                                    const TermOrder& ord, const Budget* budget) {
    const Signature& sig = f.signature();
    WorkMap h{MonoDesc{&ord}};
    for (auto& [m, c] : f.terms()) h.emplace(m, c);
    WeylElement rem(sig);
    while (!h.empty()) {
        auto [m, c] = *h.begin();
        bool hit = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            if (!leads[i].first.divides(m)) continue;
            Monomial q = m / leads[i].first;
            check_product_degree(budget, sig, q, G[i]);
            WeylElement prod = left_mono_mul(q, c / leads[i].second, G[i]);
            for (auto& [pm, pc] : prod.terms()) work_add(h, pm, -pc);
            hit = true;
            break;
        }
        if (!hit) {
            rem.add_term(m, c);
            h.erase(h.begin());
        }
    }
    return rem;
}

inline std::vector<std::pair<Monomial, Rational>> lead_table(const std::vector<WeylElement>& G,
                                                             const TermOrder& ord) {
    std::vector<std::pair<Monomial, Rational>> leads;
    leads.reserve(G.size());
    for (auto& g : G) leads.push_back(leading_term(g, ord));
    return leads;
}

}  // namespace detail

inline WeylElement left_normal_form(const WeylElement& p, const std::vector<WeylElement>& G,
                                    const TermOrder& order) {
    require_same_signature(p.signature(), order.signature());
    std::vector<WeylElement> nonzero;
    for (auto& g : G) {
        require_same_signature(g.signature(), p.signature());
        if (!g.is_zero()) nonzero.push_back(g);
    }
    if (p.is_zero() || nonzero.empty()) return p;
    return detail::normal_form_impl(p, nonzero, detail::lead_table(nonzero, order), order,
                                    nullptr);
}

inline WeylElement left_normal_form(const WeylElement& p, const GroebnerBasis& G) {
    return left_normal_form(p, G.elements, G.order);
}

inline bool ideal_member(const WeylElement& p, const GroebnerBasis& G) {
    return left_normal_form(p, G).is_zero();
}

inline GroebnerBasis left_buchberger(const std::vector<WeylElement>& gens,
                                     const TermOrder& order, const Budget& budget = {}) {
    if (gens.empty()) throw InputError("left_buchberger needs at least one generator");
    const Signature& sig = order.signature();
    for (auto& g : gens) require_same_signature(g.signature(), sig);

    std::vector<WeylElement> G;
    for (auto& g : gens)
        if (!g.is_zero()) G.push_back(detail::normalize_primitive(g, order));
    if (G.empty()) return {order, {}, true};

    auto leads = detail::lead_table(G, order);

    struct Pair {
        Monomial lcm;
        std::size_t i, j;
    };
    struct PairLess {
        const TermOrder* ord;
        bool operator()(const Pair& a, const Pair& b) const {
            if (int c = ord->compare(a.lcm, b.lcm)) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };
    std::set<Pair, PairLess> pairs{PairLess{&order}};
    auto queue_pairs_for = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i)
            pairs.insert({Monomial::lcm(leads[i].first, leads[k].first), i, k});
    };
    for (std::size_t k = 1; k < G.size(); ++k) queue_pairs_for(k);

    std::size_t processed = 0;
    while (!pairs.empty()) {
        Pair top = *pairs.begin();
        pairs.erase(pairs.begin());
        if (++processed > budget.max_pairs)
            throw ResourceError("pair-count", "S-pair budget of " +
                                                  std::to_string(budget.max_pairs) +
                                                  " exhausted");
        Monomial qi = top.lcm / leads[top.i].first;
        Monomial qj = top.lcm / leads[top.j].first;
        detail::check_product_degree(&budget, sig, qi, G[top.i]);
        detail::check_product_degree(&budget, sig, qj, G[top.j]);
        WeylElement S = detail::left_mono_mul(qi, leads[top.i].second.inverse(), G[top.i]) -
                        detail::left_mono_mul(qj, leads[top.j].second.inverse(), G[top.j]);
        WeylElement h = detail::normal_form_impl(S, G, leads, order, &budget);
        if (h.is_zero()) continue;
        h = detail::normalize_primitive(h, order);
        G.push_back(h);
        leads.push_back(detail::leading_term(h, order));
        queue_pairs_for(G.size() - 1);
    }

    // Minimalize: drop any element whose leading monomial another one divides.
    std::vector<std::size_t> by_lead(G.size());
    for (std::size_t i = 0; i < by_lead.size(); ++i) by_lead[i] = i;
    std::sort(by_lead.begin(), by_lead.end(), [&](std::size_t a, std::size_t b) {
        if (int c = order.compare(leads[a].first, leads[b].first)) return c < 0;
        return a < b;
    });
    std::vector<WeylElement> kept;
    std::vector<Monomial> kept_leads;
    for (std::size_t idx : by_lead) {
        bool redundant = false;
        for (auto& lm : kept_leads)
            if (lm.divides(leads[idx].first)) {
                redundant = true;
                break;
            }
        if (!redundant) {
            kept.push_back(G[idx]);
            kept_leads.push_back(leads[idx].first);
        }
    }

    // Tail-reduce each survivor against the others; leading monomials are
    // pairwise indivisible, so only tails change and one pass suffices.
    std::vector<WeylElement> reduced;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<WeylElement> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        WeylElement r = others.empty()
                            ? kept[i]
                            : detail::normal_form_impl(kept[i], others,
                                                       detail::lead_table(others, order),
                                                       order, &budget);
        reduced.push_back(detail::normalize_primitive(r, order));
    }
    return {order, std::move(reduced), true};
}

// Basis elements free of `block`; under an eliminating order these generate
// the intersection of the ideal with the block-free subalgebra, provided the
// block is a union of conjugate pairs or central variables.
inline std::vector<WeylElement> eliminate_block(const GroebnerBasis& G, std::uint64_t block) {
    if (!G.order.eliminates(block))
        throw InputError("the basis order does not eliminate the requested block");
    std::vector<WeylElement> out;
    for (auto& g : G.elements) {
        bool free = true;
        for (auto& [m, c] : g.terms())
            if (m.touches(block)) {
                free = false;
                break;
            }
        if (free) out.push_back(g);
    }
    return out;
}

// The weight-zero part of a left ideal in the extended algebra, for the
// weight that counts t_j as +1 and d_t_j as -1 (per j). The ideal itself is
// rarely graded, so we pass to its torus closure: adjoin central inverses
// (u_j, v_j with u_j v_j = 1), rescale t_j -> u_j t_j and d_t_j -> v_j d_t_j
// in every generator, and eliminate u, v. The result is multigraded, every
// element of it lies in the original ideal (specialize u = v = 1), and its
// weight-zero part equals the original ideal's. Each surviving generator is
// split into homogeneous components and shifted to weight zero by a left
// multiplication with the matching power of t_j or d_t_j.
inline std::vector<WeylElement> weight_zero_part(const GroebnerBasis& G,
                                                 const std::vector<int>& w,
                                                 const Budget& budget = {}) {
    const Signature& sig = G.order.signature();
    if (!sig.extended())
        throw InputError("weight_zero_part expects the extended (t-block) signature");
    if (static_cast<int>(w.size()) != sig.vars())
        throw InputError("weight vector width does not match the signature");
    for (int v = 0; v < sig.vars(); ++v) {
        int expect = sig.kind(v) == VarKind::T ? 1 : sig.kind(v) == VarKind::DT ? -1 : 0;
        if (w[v] != expect)
            throw InputError("weight vector must assign 1 to t, -1 to d_t, 0 elsewhere");
    }
    if (G.elements.empty()) return {};

    const int n = sig.n(), r = sig.r();

    // Fresh scaling variables u_j, v_j, kept clear of the user's x-names.
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(sig.var_name(sig.x_index(i)));
    auto fresh = [&](std::string base) {
        while (std::find(names.begin(), names.end(), base) != names.end()) base = "_" + base;
        return base;
    };
    std::vector<int> u_slot(r), v_slot(r);
    for (int j = 0; j < r; ++j) names.push_back(fresh("u" + std::to_string(j + 1)));
    for (int j = 0; j < r; ++j) names.push_back(fresh("v" + std::to_string(j + 1)));
    Signature aux(names, r, true);
    for (int j = 0; j < r; ++j) {
        u_slot[j] = aux.x_index(n + j);
        v_slot[j] = aux.x_index(n + r + j);
    }

    // Rescaled generators plus the unit relations u_j v_j - 1.
    std::vector<WeylElement> gens2;
    for (auto& g : G.elements) {
        WeylElement h(aux);
        for (auto& [m, c] : g.terms()) {
            std::vector<unsigned> e(aux.vars(), 0);
            for (int i = 0; i < n; ++i) {
                e[aux.x_index(i)] = m[sig.x_index(i)];
                e[aux.dx_index(i)] = m[sig.dx_index(i)];
            }
            for (int j = 0; j < r; ++j) {
                e[aux.t_index(j)] = m[sig.t_index(j)];
                e[aux.dt_index(j)] = m[sig.dt_index(j)];
                e[aux.s_index(j)] = m[sig.s_index(j)];
                e[u_slot[j]] = m[sig.t_index(j)];
                e[v_slot[j]] = m[sig.dt_index(j)];
            }
            h.add_term(Monomial(std::move(e)), c);
        }
        gens2.push_back(std::move(h));
    }
    std::uint64_t uv_block = 0;
    for (int j = 0; j < r; ++j) {
        uv_block |= std::uint64_t(1) << u_slot[j];
        uv_block |= std::uint64_t(1) << v_slot[j];
        WeylElement rel = WeylElement::var(aux, u_slot[j]) * WeylElement::var(aux, v_slot[j]) -
                          WeylElement::one(aux);
        gens2.push_back(rel);
    }

    GroebnerBasis closure = left_buchberger(gens2, TermOrder::eliminating(aux, uv_block), budget);
    std::vector<WeylElement> graded;
    for (auto& h : eliminate_block(closure, uv_block)) {
        // Map back by dropping the (now absent) u, v slots.
        WeylElement back(sig);
        for (auto& [m, c] : h.terms()) {
            std::vector<unsigned> e(sig.vars(), 0);
            for (int i = 0; i < n; ++i) {
                e[sig.x_index(i)] = m[aux.x_index(i)];
                e[sig.dx_index(i)] = m[aux.dx_index(i)];
            }
            for (int j = 0; j < r; ++j) {
                e[sig.t_index(j)] = m[aux.t_index(j)];
                e[sig.dt_index(j)] = m[aux.dt_index(j)];
                e[sig.s_index(j)] = m[aux.s_index(j)];
            }
            back.add_term(Monomial(std::move(e)), c);
        }
        graded.push_back(std::move(back));
    }

    // Split into multihomogeneous components, then shift each to weight zero.
    std::vector<WeylElement> out;
    for (auto& h : graded) {
        std::map<std::vector<int>, WeylElement> comps;
        for (auto& [m, c] : h.terms()) {
            std::vector<int> wt(r);
            for (int j = 0; j < r; ++j)
                wt[j] = static_cast<int>(m[sig.t_index(j)]) -
                        static_cast<int>(m[sig.dt_index(j)]);
            auto [it, inserted] = comps.try_emplace(std::move(wt), WeylElement::zero(sig));
            it->second.add_term(m, c);
        }
        for (auto& [wt, comp] : comps) {
            Monomial shift = Monomial::unit(sig);
            for (int j = 0; j < r; ++j) {
                if (wt[j] > 0)
                    shift = shift * Monomial::var(sig, sig.dt_index(j), wt[j]);
                else if (wt[j] < 0)
                    shift = shift * Monomial::var(sig, sig.t_index(j), -wt[j]);
            }
            WeylElement z = shift.is_unit() ? comp
                                            : detail::left_mono_mul(shift, Rational(1), comp);
            z = detail::normalize_primitive(z, G.order);
            if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
        }
    }
    return out;
}

}  // namespace bsideal
