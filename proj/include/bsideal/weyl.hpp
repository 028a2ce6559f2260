#pragma once

// Elements of the rational Weyl algebra D_n[s] and its extension by the
// (t_j, d_t_j) pairs. A term is a normally ordered word
//
//     c * x^a * t^tau * d_x^b * d_t^delta * s^gamma
//
// stored as a single flat Monomial with a rational coefficient. The only
// nontrivial commutators are d_x_i x_i = x_i d_x_i + 1 and the analogous
// relation for each (t_j, d_t_j) pair; the s-variables are central.
//
// Also here: the twisted module elements N * f^(s - k) that products of the
// f_j^{s_j} live in, and the action of operators on them. Those two pieces
// are what every oracle check in the test suite is built from.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "multipoly.hpp"
#include "rational.hpp"
#include "signature.hpp"
#include "tuple.hpp"

namespace bsideal {

class WeylElement {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit WeylElement(Signature sig) : sig_(std::move(sig)) {}

    static WeylElement zero(const Signature& sig) { return WeylElement(sig); }

    static WeylElement constant(const Signature& sig, const Rational& c) {
        WeylElement e(sig);
        e.add_term(Monomial::unit(sig), c);
        return e;
    }

    static WeylElement one(const Signature& sig) { return constant(sig, Rational(1)); }

    static WeylElement term(const Signature& sig, const Monomial& m, const Rational& c) {
        WeylElement e(sig);
        e.add_term(m, c);
        return e;
    }

    static WeylElement var(const Signature& sig, int flat, unsigned k = 1) {
        return term(sig, Monomial::var(sig, flat, k), Rational(1));
    }

    // A commutative polynomial in the coordinate and s variables, viewed as a
    // multiplication operator. Derivative variables are not allowed.
    static WeylElement from_poly(const MultiPoly& p) {
        const Signature& sig = p.signature();
        std::uint64_t allowed = sig.x_block() | sig.t_block() | sig.s_block();
        if (!p.uses_only(allowed))
            throw InputError("from_poly: polynomial uses derivative variables");
        WeylElement e(sig);
        for (auto& [m, c] : p.terms()) e.add_term(m, c);
        return e;
    }

    const Signature& signature() const { return sig_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        if (m.nvars() != sig_.vars())
            throw std::invalid_argument("monomial width does not match signature");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    WeylElement& operator+=(const WeylElement& o) {
        require_same_signature(sig_, o.sig_);
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    WeylElement& operator-=(const WeylElement& o) {
        require_same_signature(sig_, o.sig_);
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }

    WeylElement operator-() const {
        WeylElement e(sig_);
        for (auto& [m, c] : terms_) e.terms_.emplace(m, -c);
        return e;
    }

    WeylElement scaled(const Rational& c) const {
        WeylElement e(sig_);
        if (c.is_zero()) return e;
        for (auto& [m, k] : terms_) e.terms_.emplace(m, k * c);
        return e;
    }

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

    // Largest total degree in the operator variables (x, d_x, t, d_t) over
    // all terms, and likewise in s. These feed the resource budgets.
    int op_degree() const {
        int d = -1;
        for (auto& [m, c] : terms_)
            d = std::max(d, static_cast<int>(m.degree_on(sig_.op_block())));
        return d;
    }
    int s_degree() const {
        int d = -1;
        for (auto& [m, c] : terms_)
            d = std::max(d, static_cast<int>(m.degree_on(sig_.s_block())));
        return d;
    }

    bool uses_only(std::uint64_t block) const {
        for (auto& [m, c] : terms_)
            if (m.touches(~block)) return false;
        return true;
    }

    // Commutative image; only valid when no derivative variables occur.
    MultiPoly to_poly() const {
        std::uint64_t allowed = sig_.x_block() | sig_.t_block() | sig_.s_block();
        if (!uses_only(allowed))
            throw InputError("to_poly: element uses derivative variables");
        MultiPoly p = MultiPoly::zero(sig_);
        for (auto& [m, c] : terms_) p.add_term(m, c);
        return p;
    }

    // Remap the element onto another signature (e.g. plain <-> extended).
    // Exponents travel by variable identity; an exponent on a variable the
    // target lacks is an error.
    WeylElement with_signature(const Signature& to) const {
        WeylElement out(to);
        for (auto& [m, c] : terms_) out.add_term(remap(m, sig_, to), c);
        return out;
    }

    static Monomial remap(const Monomial& m, const Signature& from, const Signature& to) {
        std::vector<unsigned> e(to.vars(), 0);
        for (int flat = 0; flat < from.vars(); ++flat) {
            unsigned k = m[flat];
            if (k == 0) continue;
            VarKind kind = from.kind(flat);
            int pos = from.block_pos(flat);
            int target = -1;
            switch (kind) {
                case VarKind::X: target = pos < to.n() ? to.x_index(pos) : -1; break;
                case VarKind::DX: target = pos < to.n() ? to.dx_index(pos) : -1; break;
                case VarKind::T: target = to.extended() && pos < to.r() ? to.t_index(pos) : -1; break;
                case VarKind::DT: target = to.extended() && pos < to.r() ? to.dt_index(pos) : -1; break;
                case VarKind::S: target = pos < to.r() ? to.s_index(pos) : -1; break;
            }
            if (target < 0)
                throw InputError("with_signature: element uses a variable the target signature lacks");
            e[target] = k;
        }
        return Monomial(std::move(e));
    }

    // Group terms by their operator part: the map sends an (x, d_x, t, d_t)
    // monomial to its coefficient, a polynomial in the s-variables.
    std::map<Monomial, MultiPoly> s_coefficient_view() const {
        std::map<Monomial, MultiPoly> view;
        for (auto& [m, c] : terms_) {
            std::vector<unsigned> op(sig_.vars(), 0), sv(sig_.vars(), 0);
            for (int flat = 0; flat < sig_.vars(); ++flat) {
                if (sig_.kind(flat) == VarKind::S)
                    sv[flat] = m[flat];
                else
                    op[flat] = m[flat];
            }
            Monomial opm{std::move(op)};
            auto [it, inserted] = view.try_emplace(opm, MultiPoly::zero(sig_));
            it->second.add_term(Monomial(std::move(sv)), c);
        }
        return view;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        auto view = s_coefficient_view();
        // Print highest operator part first: sort by deglex descending.
        std::vector<const std::pair<const Monomial, MultiPoly>*> order;
        for (auto& entry : view) order.push_back(&entry);
        std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
            return deglex_less(b->first, a->first);
        });
        std::string out;
        bool first = true;
        for (auto* entry : order) {
            std::string op = op_monomial_str(entry->first);
            const MultiPoly& cs = entry->second;
            std::string piece;
            bool negative = false;
            if (cs.term_count() == 1) {
                auto& [sm, sc] = *cs.terms().begin();
                Rational a = sc;
                if (a.sign() < 0) {
                    negative = true;
                    a = -a;
                }
                std::string coeff = MultiPoly::term(sig_, sm, a).str();
                if (coeff == "1" && !op.empty())
                    piece = op;
                else
                    piece = op.empty() ? coeff : coeff + "*" + op;
            } else {
                piece = "(" + cs.str() + ")";
                if (!op.empty()) piece += "*" + op;
            }
            if (first) {
                out = negative ? "-" + piece : piece;
                first = false;
            } else {
                out += negative ? " - " : " + ";
                out += piece;
            }
        }
        return out;
    }

private:
    std::string op_monomial_str(const Monomial& m) const {
        // Display in normal order: coordinates first, then derivatives.
        std::string out;
        auto emit = [&](int flat) {
            unsigned k = m[flat];
            if (k == 0) return;
            if (!out.empty()) out += "*";
            out += sig_.var_name(flat);
            if (k > 1) out += "^" + std::to_string(k);
        };
        for (int i = 0; i < sig_.n(); ++i) emit(sig_.x_index(i));
        if (sig_.extended())
            for (int j = 0; j < sig_.r(); ++j) emit(sig_.t_index(j));
        for (int i = 0; i < sig_.n(); ++i) emit(sig_.dx_index(i));
        if (sig_.extended())
            for (int j = 0; j < sig_.r(); ++j) emit(sig_.dt_index(j));
        return out;
    }

    Signature sig_;
    TermMap terms_;
};

namespace detail {

// Normally order (derivative part of a) * (coordinate part of b) one term at
// a time. For a single conjugate pair, d^b x^a expands as
//   sum_k k! * C(a,k) * C(b,k) * x^(a-k) d^(b-k),
// and distinct pairs commute, so the general case is a product of such sums.
inline void accumulate_normal_product(WeylElement& out, const Signature& sig,
                                      const Monomial& am, const Rational& ac,
                                      const Monomial& bm, const Rational& bc) {
    struct Contraction {
        int coord_slot;
        int deriv_slot;
        unsigned coord_exp;   // from bm
        unsigned deriv_exp;   // from am
    };
    std::vector<Contraction> pairs;
    for (int i = 0; i < sig.n(); ++i) {
        unsigned b = am[sig.dx_index(i)], a = bm[sig.x_index(i)];
        if (a > 0 && b > 0) pairs.push_back({sig.x_index(i), sig.dx_index(i), a, b});
    }
    if (sig.extended()) {
        for (int j = 0; j < sig.r(); ++j) {
            unsigned b = am[sig.dt_index(j)], a = bm[sig.t_index(j)];
            if (a > 0 && b > 0) pairs.push_back({sig.t_index(j), sig.dt_index(j), a, b});
        }
    }
    const Monomial base = am * bm;
    const Rational cc = ac * bc;
    std::vector<unsigned> k(pairs.size(), 0);
    while (true) {
        Integer factor = 1;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            if (k[p] == 0) continue;
            factor *= factorial(k[p]);
            factor *= binomial(pairs[p].coord_exp, k[p]);
            factor *= binomial(pairs[p].deriv_exp, k[p]);
        }
        std::vector<unsigned> e = base.exponents();
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            e[pairs[p].coord_slot] -= k[p];
            e[pairs[p].deriv_slot] -= k[p];
        }
        out.add_term(Monomial(std::move(e)), cc * Rational(factor));
        std::size_t p = 0;
        for (; p < pairs.size(); ++p) {
            if (k[p] < std::min(pairs[p].coord_exp, pairs[p].deriv_exp)) {
                ++k[p];
                std::fill(k.begin(), k.begin() + p, 0u);
                break;
            }
        }
        if (p == pairs.size()) break;
    }
}

}  // namespace detail

inline WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
    require_same_signature(a.signature(), b.signature());
    WeylElement out(a.signature());
    for (auto& [am, ac] : a.terms())
        for (auto& [bm, bc] : b.terms())
            detail::accumulate_normal_product(out, a.signature(), am, ac, bm, bc);
    return out;
}

inline WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    return weyl_mul(a, b);
}

// Commutator [a, b] = ab - ba.
inline WeylElement weyl_commutator(const WeylElement& a, const WeylElement& b) {
    return weyl_mul(a, b) - weyl_mul(b, a);
}

// Rewrite an extended element with matched t/d_t exponents as an element of
// D_n[s]: each factor t_j^a d_t_j^a equals theta(theta-1)...(theta-a+1) for
// theta = t_j d_t_j, and theta acts on the f^s module as -s_j - 1. A term
// where some t_j and d_t_j exponents differ is an error; such an element has
// no meaning as an operator on f^s.
inline WeylElement substitute_s(const WeylElement& p) {
    const Signature& ext = p.signature();
    if (!ext.extended())
        throw InputError("substitute_s expects an element of the extended algebra");
    Signature plain = ext.with_extended(false);
    WeylElement out(plain);
    for (auto& [m, c] : p.terms()) {
        std::vector<unsigned> e(plain.vars(), 0);
        for (int i = 0; i < ext.n(); ++i) {
            e[plain.x_index(i)] = m[ext.x_index(i)];
            e[plain.dx_index(i)] = m[ext.dx_index(i)];
        }
        for (int j = 0; j < ext.r(); ++j) e[plain.s_index(j)] = m[ext.s_index(j)];
        MultiPoly sfactor = MultiPoly::constant(plain, c);
        for (int j = 0; j < ext.r(); ++j) {
            unsigned a = m[ext.t_index(j)];
            if (a != m[ext.dt_index(j)])
                throw InputError("substitute_s: term has unbalanced t and d_t exponents");
            // prod_{i=0}^{a-1} (-s_j - 1 - i)
            for (unsigned i = 0; i < a; ++i) {
                MultiPoly lin = MultiPoly::constant(plain, Rational(-1 - static_cast<long>(i))) -
                                MultiPoly::var(plain, plain.s_index(j));
                sfactor *= lin;
            }
        }
        Monomial base{std::move(e)};
        for (auto& [sm, sc] : sfactor.terms()) out.add_term(base * sm, sc);
    }
    return out;
}

// Move a commutative polynomial between signatures (plain vs extended), by
// variable identity.
inline MultiPoly poly_with_signature(const MultiPoly& p, const Signature& to) {
    if (p.signature() == to) return p;
    MultiPoly out = MultiPoly::zero(to);
    for (auto& [m, c] : p.terms())
        out.add_term(WeylElement::remap(m, p.signature(), to), c);
    return out;
}

// An element N * f_1^(s_1-k_1) * ... * f_r^(s_r-k_r) of the twisted module,
// with N a polynomial in the x- and s-variables. The representation is not
// unique (N and k can both absorb factors of f_j), so equality goes through
// cross-multiplication. Reduction cancels f_j from N greedily; that keeps
// the numerators small but does not canonicalize.
class TwistedElement {
public:
    TwistedElement(MultiPoly numerator, std::vector<unsigned> k)
        : num_(std::move(numerator)), k_(std::move(k)) {
        const Signature& sig = num_.signature();
        if (sig.extended())
            throw InputError("twisted elements live over the plain signature");
        if (static_cast<int>(k_.size()) != sig.r())
            throw InputError("denominator exponent count does not match the signature");
        if (!num_.uses_only(sig.x_block() | sig.s_block()))
            throw InputError("twisted numerator must be a polynomial in x and s");
        if (num_.is_zero()) std::fill(k_.begin(), k_.end(), 0u);
    }

    // prod f_j^{m_j} * f^s; with m = 0 this is f^s itself.
    static TwistedElement power_product(const InputTuple& F, const MultiIndex& m) {
        if (m.size() != static_cast<std::size_t>(F.r()))
            throw InputError("multi-index length does not match the tuple");
        MultiPoly num = MultiPoly::one(F.signature());
        for (int j = 0; j < F.r(); ++j) num *= F.f(j).pow(m[j]);
        return TwistedElement(std::move(num), std::vector<unsigned>(F.r(), 0));
    }

    static TwistedElement fs(const InputTuple& F) {
        return power_product(F, MultiIndex(F.r(), 0));
    }

    const MultiPoly& numerator() const { return num_; }
    const std::vector<unsigned>& denominator_exponents() const { return k_; }
    bool is_zero() const { return num_.is_zero(); }

    TwistedElement reduced(const InputTuple& F) const {
        check_tuple(F);
        if (num_.is_zero()) return TwistedElement(num_, std::vector<unsigned>(k_.size(), 0));
        MultiPoly n = num_;
        std::vector<unsigned> k = k_;
        for (int j = 0; j < F.r(); ++j) {
            while (k[j] > 0) {
                auto q = try_exact_divide(n, F.f(j));
                if (!q) break;
                n = std::move(*q);
                --k[j];
            }
        }
        return TwistedElement(std::move(n), std::move(k));
    }

    // Multiply by a polynomial in x and s.
    TwistedElement times(const MultiPoly& p) const {
        return TwistedElement(num_ * p, k_);
    }

    TwistedElement scaled(const Rational& c) const {
        return TwistedElement(num_.scaled(c), k_);
    }

    // Partial derivative d/dx_i. Every denominator exponent steps up by one:
    //   d/dx_i [N f^(s-k)] =
    //     [dN/dx_i * prod_j f_j
    //        + sum_j (s_j - k_j) N df_j/dx_i prod_{l != j} f_l] * f^(s-k-1).
    TwistedElement dx(const InputTuple& F, int i) const {
        check_tuple(F);
        const Signature& sig = num_.signature();
        if (i < 0 || i >= sig.n()) throw InputError("derivative index out of range");
        MultiPoly next = num_.derivative(sig.x_index(i));
        for (int j = 0; j < F.r(); ++j) next *= F.f(j);
        for (int j = 0; j < F.r(); ++j) {
            MultiPoly sj = MultiPoly::var(sig, sig.s_index(j)) -
                           MultiPoly::constant(sig, Rational(static_cast<long>(k_[j])));
            MultiPoly part = sj * num_ * F.f(j).derivative(sig.x_index(i));
            for (int l = 0; l < F.r(); ++l)
                if (l != j) part *= F.f(l);
            next += part;
        }
        std::vector<unsigned> k = k_;
        for (auto& kj : k) ++kj;
        return TwistedElement(std::move(next), std::move(k)).reduced(F);
    }

    static TwistedElement add(const InputTuple& F, const TwistedElement& a,
                              const TwistedElement& b) {
        a.check_tuple(F);
        b.check_tuple(F);
        std::vector<unsigned> K(a.k_.size());
        for (std::size_t j = 0; j < K.size(); ++j) K[j] = std::max(a.k_[j], b.k_[j]);
        MultiPoly na = a.num_, nb = b.num_;
        for (std::size_t j = 0; j < K.size(); ++j) {
            na *= F.f(static_cast<int>(j)).pow(K[j] - a.k_[j]);
            nb *= F.f(static_cast<int>(j)).pow(K[j] - b.k_[j]);
        }
        return TwistedElement(na + nb, std::move(K)).reduced(F);
    }

    static bool equal(const InputTuple& F, const TwistedElement& a, const TwistedElement& b) {
        a.check_tuple(F);
        b.check_tuple(F);
        MultiPoly na = a.num_, nb = b.num_;
        for (std::size_t j = 0; j < a.k_.size(); ++j) {
            unsigned K = std::max(a.k_[j], b.k_[j]);
            na *= F.f(static_cast<int>(j)).pow(K - a.k_[j]);
            nb *= F.f(static_cast<int>(j)).pow(K - b.k_[j]);
        }
        return na == nb;
    }

    std::string str(const InputTuple& F) const {
        std::string out = "(" + num_.str() + ")";
        for (int j = 0; j < F.r(); ++j) {
            out += " * (" + F.f(j).str() + ")^(" + num_.signature().s_name(j);
            if (k_[j] > 0) out += " - " + std::to_string(k_[j]);
            out += ")";
        }
        return out;
    }

private:
    void check_tuple(const InputTuple& F) const {
        require_same_signature(num_.signature(), F.signature());
        if (k_.size() != static_cast<std::size_t>(F.r()))
            throw InputError("twisted element does not match the tuple");
    }

    MultiPoly num_;
    std::vector<unsigned> k_;
};

// Apply an operator P in D_n[s] to a twisted element. Terms act in normal
// order: derivatives first, then multiplication by the coordinate part, the
// s-part and the coefficient.
inline TwistedElement weyl_apply_twisted(const WeylElement& p, const InputTuple& F,
                                         const TwistedElement& u) {
    require_same_signature(p.signature(), F.signature());
    const Signature& sig = F.signature();
    TwistedElement acc(MultiPoly::zero(sig), std::vector<unsigned>(F.r(), 0));
    for (auto& [m, c] : p.terms()) {
        TwistedElement v = u;
        for (int i = 0; i < sig.n(); ++i) {
            unsigned b = m[sig.dx_index(i)];
            for (unsigned rep = 0; rep < b; ++rep) v = v.dx(F, i);
        }
        std::vector<unsigned> coord(sig.vars(), 0);
        for (int i = 0; i < sig.n(); ++i) coord[sig.x_index(i)] = m[sig.x_index(i)];
        for (int j = 0; j < sig.r(); ++j) coord[sig.s_index(j)] = m[sig.s_index(j)];
        v = v.times(MultiPoly::term(sig, Monomial(std::move(coord)), c));
        acc = TwistedElement::add(F, acc, v);
    }
    return acc;
}

// Does b(s) * f^s equal P applied to prod f^m * f^s? This is the defining
// functional equation of the shifted ideals, with all data explicit; for
// r = 1, m = (1) it reads b(s) f^s = P f^(s+1).
inline bool verifies_functional_equation(const InputTuple& F, const MultiIndex& m,
                                         const MultiPoly& b, const WeylElement& p) {
    const Signature& sig = F.signature();
    require_same_signature(b.signature(), sig);
    if (!b.uses_only(sig.s_block()))
        throw InputError("the candidate b must be a polynomial in the s-variables");
    TwistedElement lhs = TwistedElement::fs(F).times(b);
    TwistedElement rhs = weyl_apply_twisted(p, F, TwistedElement::power_product(F, m));
    return TwistedElement::equal(F, lhs, rhs);
}

}  // namespace bsideal
