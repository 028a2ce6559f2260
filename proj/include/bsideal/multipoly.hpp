#pragma once

// Sparse multivariate polynomials over Q with exact arithmetic: the x-side
// carries input tuples and twisted numerators, the s-side carries b-polynomials
// and Bernstein-Sato ideal generators. Arithmetic entry points are the usual
// operators plus exact_divide; all of them insist on matching signatures.

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "signature.hpp"

namespace bsideal {

// Degree-then-lex; used to pick leading terms for division and printing.
inline bool deglex_less(const Monomial& a, const Monomial& b) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.exponents() < b.exponents();
}

class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    MultiPoly() = default;
    explicit MultiPoly(Signature sig) : sig_(std::move(sig)) {}

    static MultiPoly zero(const Signature& sig) { return MultiPoly(sig); }
    static MultiPoly constant(const Signature& sig, const Rational& c) {
        MultiPoly p(sig);
        if (!c.is_zero()) p.terms_[Monomial::unit(sig)] = c;
        return p;
    }
    static MultiPoly one(const Signature& sig) { return constant(sig, Rational(1)); }
    static MultiPoly var(const Signature& sig, int flat, unsigned k = 1) {
        MultiPoly p(sig);
        p.terms_[Monomial::var(sig, flat, k)] = Rational(1);
        return p;
    }
    static MultiPoly term(const Signature& sig, const Monomial& m, const Rational& c) {
        MultiPoly p(sig);
        if (!c.is_zero()) p.terms_[m] = c;
        return p;
    }

    const Signature& signature() const { return sig_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::logic_error("polynomial is not constant");
        return terms_.begin()->second;
    }
    std::size_t term_count() const { return terms_.size(); }

    unsigned total_degree() const {
        unsigned d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }
    unsigned degree_in(int var) const {
        unsigned d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m[var]);
        return d;
    }
    unsigned min_exponent_in(int var) const {
        if (terms_.empty()) return 0;
        unsigned d = ~0u;
        for (auto& [m, c] : terms_) d = std::min(d, m[var]);
        return d;
    }
    bool uses_only(std::uint64_t mask) const {
        for (auto& [m, c] : terms_)
            for (int i = 0; i < m.nvars(); ++i)
                if (m[i] > 0 && !(mask >> i & 1)) return false;
        return true;
    }
    bool touches(std::uint64_t mask) const {
        for (auto& [m, c] : terms_)
            if (m.touches(mask)) return true;
        return false;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Leading term w.r.t. deglex.
    std::pair<Monomial, Rational> leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (deglex_less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly p(sig_);
        for (auto& [m, c] : terms_) p.terms_[m] = -c;
        return p;
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        require_same_signature(sig_, o.sig_);
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        require_same_signature(sig_, o.sig_);
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        require_same_signature(a.sig_, b.sig_);
        MultiPoly p(a.sig_);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
        return p;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const Rational& c) const {
        MultiPoly p(sig_);
        if (c.is_zero()) return p;
        for (auto& [m, q] : terms_) p.terms_[m] = q * c;
        return p;
    }

    MultiPoly pow(unsigned k) const {
        MultiPoly acc = one(sig_);
        for (unsigned i = 0; i < k; ++i) acc *= *this;
        return acc;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Formal partial derivative in one flat variable (an x-variable in practice).
    MultiPoly derivative(int var) const {
        MultiPoly p(sig_);
        for (auto& [m, c] : terms_) {
            unsigned e = m[var];
            if (e == 0) continue;
            Monomial m2 = m;
            m2[var] = e - 1;
            p.add_term(m2, c * Rational(static_cast<long>(e)));
        }
        return p;
    }

    // Replace one variable by a polynomial over the same signature.
    MultiPoly substitute(int var, const MultiPoly& value) const {
        require_same_signature(sig_, value.sig_);
        MultiPoly out(sig_);
        for (auto& [m, c] : terms_) {
            Monomial rest = m;
            unsigned e = rest[var];
            rest[var] = 0;
            MultiPoly t = MultiPoly::term(sig_, rest, c) * value.pow(e);
            out += t;
        }
        return out;
    }
    MultiPoly substitute(int var, const Rational& value) const {
        return substitute(var, constant(sig_, value));
    }

    // Positive rational c with p/c integer-primitive; content(0) = 1.
    Rational content() const {
        if (terms_.empty()) return Rational(1);
        Integer g = 0, l = 1;
        for (auto& [m, c] : terms_) {
            g = gcd(g, c.num());
            l = lcm(l, c.den());
        }
        if (g < 0) g = -g;
        return Rational(g, l);
    }
    MultiPoly primitive_part() const {
        if (terms_.empty()) return *this;
        return scaled(content().inverse());
    }
    // Leading (deglex) coefficient made positive; combined with primitive_part
    // this is the canonical integer representative of the Q-scaling class.
    MultiPoly sign_normalized() const {
        if (terms_.empty()) return *this;
        return leading_term().second.sign() < 0 ? -*this : *this;
    }
    MultiPoly monic() const {
        if (terms_.empty()) return *this;
        return scaled(leading_term().second.inverse());
    }

    // Coefficient of var^k, as a polynomial with var cleared.
    MultiPoly coefficient_in(int var, unsigned k) const {
        MultiPoly p(sig_);
        for (auto& [m, c] : terms_) {
            if (m[var] != k) continue;
            Monomial m2 = m;
            m2[var] = 0;
            p.add_term(m2, c);
        }
        return p;
    }

    std::vector<int> used_vars() const {
        std::vector<int> out;
        int nv = sig_.vars();
        for (int i = 0; i < nv; ++i) {
            for (auto& [m, c] : terms_)
                if (m[i] > 0) {
                    out.push_back(i);
                    break;
                }
        }
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        // Highest degree first, lex-descending within a degree.
        std::vector<const std::pair<const Monomial, Rational>*> ts;
        for (auto& t : terms_) ts.push_back(&t);
        std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
            return deglex_less(b->first, a->first);
        });
        std::ostringstream os;
        bool first = true;
        for (auto* t : ts) {
            const Rational& c = t->second;
            Rational a = c.abs();
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            std::string mono = monomial_str(t->first);
            if (mono.empty()) {
                os << a.str();
            } else {
                if (!a.is_one()) os << a.str() << "*";
                os << mono;
            }
        }
        return os.str();
    }

private:
    std::string monomial_str(const Monomial& m) const {
        std::string out;
        for (int i = 0; i < m.nvars(); ++i) {
            if (m[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += sig_.var_name(i);
            if (m[i] > 1) out += "^" + std::to_string(m[i]);
        }
        return out;
    }

    Signature sig_;
    TermMap terms_;
};

// Exact multivariate division: returns p/q when q divides p, nullopt otherwise.
inline std::optional<MultiPoly> try_exact_divide(const MultiPoly& p, const MultiPoly& q) {
    require_same_signature(p.signature(), q.signature());
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    MultiPoly quo(p.signature());
    MultiPoly rem = p;
    auto [qm, qc] = q.leading_term();
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading_term();
        if (!qm.divides(rm)) return std::nullopt;
        MultiPoly t = MultiPoly::term(p.signature(), rm / qm, rc / qc);
        quo += t;
        rem -= t * q;
    }
    return quo;
}

inline MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q) {
    auto quo = try_exact_divide(p, q);
    if (!quo) throw std::domain_error("inexact polynomial division");
    return *quo;
}

inline bool divides(const MultiPoly& q, const MultiPoly& p) {
    return try_exact_divide(p, q).has_value();
}

}  // namespace bsideal
