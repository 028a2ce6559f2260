#pragma once

// Linear forms in the s-variables, rational root extraction, and complete
// factorization of s-polynomials into rational linear factors. No algebraic
// extensions: whatever does not split over Q is returned as an explicit
// remainder, never dropped.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "multipoly.hpp"
#include "rational.hpp"
#include "signature.hpp"

namespace bsideal {

// a_1 s_1 + ... + a_r s_r + b with integer entries, stored normalized:
// gcd of all entries is 1 and the first nonzero a_j is positive.
class LinearForm {
public:
    LinearForm(std::vector<Integer> a, Integer b) : a_(std::move(a)), b_(std::move(b)) {
        normalize();
    }

    const std::vector<Integer>& a() const { return a_; }
    const Integer& b() const { return b_; }
    int r() const { return static_cast<int>(a_.size()); }

    MultiPoly poly(const Signature& sig) const {
        if (sig.r() != r()) throw InputError("linear form arity does not match signature");
        MultiPoly p = MultiPoly::constant(sig, Rational(b_));
        for (int j = 0; j < r(); ++j)
            p += MultiPoly::var(sig, sig.s_index(j)).scaled(Rational(a_[j]));
        return p;
    }

    // Divided by the leading (first nonzero) coefficient: (2s+1) -> s + 1/2.
    MultiPoly monic_poly(const Signature& sig) const {
        MultiPoly p = poly(sig);
        return p.monic();
    }

    friend bool operator==(const LinearForm& x, const LinearForm& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const LinearForm& x, const LinearForm& y) { return !(x == y); }
    friend bool operator<(const LinearForm& x, const LinearForm& y) {
        if (x.a_ != y.a_) return x.a_ < y.a_;
        return x.b_ < y.b_;
    }

private:
    void normalize() {
        Integer g = 0;
        bool any = false;
        for (auto& ai : a_) {
            g = gcd(g, ai);
            any = any || ai != 0;
        }
        if (!any) throw InputError("linear form needs a nonzero s-part");
        g = gcd(g, b_);
        if (g < 0) g = -g;
        int lead_sign = 0;
        for (auto& ai : a_)
            if (ai != 0) {
                lead_sign = sgn(ai);
                break;
            }
        if (lead_sign < 0) g = -g;
        for (auto& ai : a_) ai = exact_div(ai, g);
        b_ = exact_div(b_, g);
    }

    std::vector<Integer> a_;
    Integer b_;
};

namespace detail {

// All positive divisors, by trial division. Inputs in this engine are the
// integer contents of b-polynomial coefficients, which stay small; a step
// budget keeps adversarial inputs loud instead of slow.
inline std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    if (n == 0) throw std::logic_error("divisors of zero requested");
    std::vector<Integer> small, large;
    Integer i = 1;
    long steps = 0;
    while (i * i <= n) {
        if (++steps > 5'000'000)
            throw ResourceError("divisor-search", "integer too large to factor: " + n.get_str());
        if (n % i == 0) {
            small.push_back(i);
            Integer j = n / i;
            if (j != i) large.push_back(j);
        }
        ++i;
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

inline int single_used_s_var(const MultiPoly& p) {
    const Signature& sig = p.signature();
    auto used = p.used_vars();
    if (used.empty()) return -1;
    if (used.size() != 1 || sig.kind(used[0]) != VarKind::S)
        throw InputError("polynomial is not univariate in one s-variable: " + p.str());
    return used[0];
}

}  // namespace detail

// Rational roots with multiplicities of a polynomial in a single s-variable,
// sorted ascending. Complete over Q by the rational root theorem.
inline std::vector<std::pair<Rational, unsigned>> univariate_rational_roots(
    const MultiPoly& p_in) {
    if (p_in.is_zero()) throw InputError("rational roots of the zero polynomial");
    const Signature& sig = p_in.signature();
    int var = detail::single_used_s_var(p_in);
    std::vector<std::pair<Rational, unsigned>> roots;
    if (var < 0) return roots;  // nonzero constant

    MultiPoly p = p_in.primitive_part().sign_normalized();
    unsigned v = p.min_exponent_in(var);
    if (v > 0) {
        roots.emplace_back(Rational(0), v);
        MultiPoly q(sig);
        for (auto& [m, c] : p.terms()) {
            Monomial m2 = m;
            m2[var] -= v;
            q.add_term(m2, c);
        }
        p = q;
    }
    if (p.is_constant()) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    unsigned d = p.degree_in(var);
    Integer c0 = p.coefficient_in(var, 0).constant_value().num();
    Integer cd = p.coefficient_in(var, d).constant_value().num();
    auto nums = detail::positive_divisors(c0);
    auto dens = detail::positive_divisors(cd);
    for (auto& den : dens) {
        for (auto& num : nums) {
            if (gcd(num, den) != 1) continue;
            for (int sign : {1, -1}) {
                Rational root(sign > 0 ? num : -num, den);
                if (!p.substitute(var, root).is_zero()) continue;
                // den*s - num is the primitive integer factor for this root.
                MultiPoly factor =
                    MultiPoly::var(sig, var).scaled(Rational(root.den())) -
                    MultiPoly::constant(sig, Rational(root.num()));
                unsigned mult = 0;
                for (;;) {
                    auto quo = try_exact_divide(p, factor);
                    if (!quo) break;
                    p = *quo;
                    ++mult;
                }
                roots.emplace_back(root, mult);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

struct Factorization {
    Rational constant;                                   // overall rational scale
    std::vector<std::pair<LinearForm, unsigned>> factors;  // canonical order
    MultiPoly remainder;  // integer-primitive, positive leading, no linear factor
};

namespace detail {

// Candidate linear forms covering every linear factor of the integer-primitive
// s-polynomial p. Recursion over the used variables:
//  - factors not involving the main variable u divide the leading coefficient
//    in u, so they recurse into it;
//  - factors a*u + g satisfy a | content(lc_u(p)) and g | p|_{u=0} (Gauss),
//    so a, g come from divisor and recursive factor enumeration.
// Everything returned here is only a candidate; callers verify by division.
inline void linear_factor_candidates(const MultiPoly& p_in, std::vector<LinearForm>& out) {
    const Signature& sig = p_in.signature();
    int r = sig.r();
    MultiPoly p = p_in;

    std::vector<int> used = p.used_vars();
    if (used.empty()) return;
    int u = used[0];

    auto push = [&](std::vector<Integer> a, Integer b) {
        bool any = false;
        for (auto& ai : a) any = any || ai != 0;
        if (!any) return;
        LinearForm f(std::move(a), std::move(b));
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    };

    int uj = sig.block_pos(u);  // s-block position of the main variable
    unsigned v = p.min_exponent_in(u);
    if (v > 0) {
        std::vector<Integer> a(r, 0);
        a[uj] = 1;
        push(std::move(a), 0);
        MultiPoly q(sig);
        for (auto& [m, c] : p.terms()) {
            Monomial m2 = m;
            m2[u] -= v;
            q.add_term(m2, c);
        }
        p = q;
    }

    if (used.size() == 1) {
        // Univariate tail: the rational root theorem is already complete.
        for (auto& [root, mult] : univariate_rational_roots(p)) {
            std::vector<Integer> a(r, 0);
            a[uj] = root.den();
            push(std::move(a), -root.num());
        }
        return;
    }

    unsigned d = p.degree_in(u);
    MultiPoly cd = p.coefficient_in(u, d).primitive_part().sign_normalized();
    MultiPoly c0 = p.coefficient_in(u, 0);

    // (A) factors that avoid u entirely.
    linear_factor_candidates(cd, out);

    // (B) factors a*u + g.
    Integer content_cd = p.coefficient_in(u, d).content().num();
    if (content_cd < 0) content_cd = -content_cd;
    Integer content_c0 = c0.content().num();
    if (content_c0 < 0) content_c0 = -content_c0;
    auto as = positive_divisors(content_cd);
    auto es = positive_divisors(content_c0);

    std::vector<LinearForm> g_cands;
    linear_factor_candidates(c0.primitive_part().sign_normalized(), g_cands);

    for (auto& a_lead : as) {
        // g a constant: a*u + b with b | content(c0).
        for (auto& e : es)
            for (int sign : {1, -1}) {
                std::vector<Integer> a(r, 0);
                a[uj] = a_lead;
                push(std::move(a), sign > 0 ? e : Integer(-e));
            }
        // g a scaled primitive linear factor of c0.
        for (auto& ghat : g_cands)
            for (auto& e : es)
                for (int sign : {1, -1}) {
                    std::vector<Integer> a(r, 0);
                    a[uj] = a_lead;
                    Integer scale = sign > 0 ? e : Integer(-e);
                    for (int j = 0; j < r; ++j)
                        if (j != uj) a[j] = scale * ghat.a()[j];
                    if (ghat.a()[uj] != 0) continue;  // candidate g may not reuse u
                    push(std::move(a), scale * ghat.b());
                }
    }
}

}  // namespace detail

// p = constant * prod(factor^mult) * remainder, complete over Q. Factors are
// normalized integer forms in canonical order; the remainder has no rational
// linear factor.
inline Factorization linear_factorization(const MultiPoly& p) {
    if (p.is_zero()) throw InputError("cannot factor the zero polynomial");
    if (!p.uses_only(p.signature().s_block()))
        throw InputError("linear_factorization expects a polynomial in the s-variables");

    Factorization out{Rational(1), {}, p};
    Rational content = p.content();
    MultiPoly q = p.scaled(content.inverse());
    int lead_sign = q.leading_term().second.sign();
    if (lead_sign < 0) {
        q = -q;
        content = -content;
    }
    out.constant = content;

    if (q.is_constant()) {
        out.remainder = MultiPoly::one(p.signature());
        return out;
    }

    std::vector<LinearForm> candidates;
    detail::linear_factor_candidates(q, candidates);
    std::sort(candidates.begin(), candidates.end());

    for (auto& form : candidates) {
        MultiPoly fpoly = form.poly(p.signature());
        unsigned mult = 0;
        for (;;) {
            auto quo = try_exact_divide(q, fpoly);
            if (!quo) break;
            q = *quo;
            ++mult;
        }
        if (mult > 0) out.factors.emplace_back(form, mult);
    }
    out.remainder = q;
    return out;
}

// Canonical display form used for ideal generators: monic linear factors in
// parentheses with multiplicities, followed by the monic remainder when it is
// not constant. The input is expected monic; "(s+1)*(s+1/2)" style.
inline std::string factored_str(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    Factorization f = linear_factorization(p);
    std::string out;
    Rational lead = p.leading_term().second;
    if (!lead.is_one() && !p.is_constant()) out = lead.str();
    for (auto& [form, mult] : f.factors) {
        if (!out.empty()) out += "*";
        out += "(" + form.monic_poly(p.signature()).str() + ")";
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    if (!f.remainder.is_constant()) {
        if (!out.empty()) out += "*";
        out += "(" + f.remainder.monic().str() + ")";
    }
    if (out.empty()) return p.str();
    return out;
}

}  // namespace bsideal
