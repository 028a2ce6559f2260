#pragma once

// Zero-locus decomposition of Bernstein-Sato ideals, the exponential map to
// the r-torus, and exact arithmetic of torsion-translated subtori. Roots of
// unity are rational angles mod 1 throughout; no floating point anywhere.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linear.hpp"
#include "multipoly.hpp"
#include "pipeline.hpp"
#include "rational.hpp"
#include "signature.hpp"

namespace bsideal {

namespace detail {

inline Rational mod_one(const Rational& q) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
    return q - Rational(fl);
}

}  // namespace detail

// The hyperplane a_1 s_1 + ... + a_r s_r + b = 0 with natural coefficients
// and a positive offset, kept exactly as factored: the content is preserved,
// and only comparisons canonicalize by it.
class HyperplaneComponent {
public:
    HyperplaneComponent(std::vector<Integer> a, Integer b)
        : a_(std::move(a)), b_(std::move(b)) {
        bool any = false;
        for (auto& ai : a_) {
            if (ai < 0) throw InputError("hyperplane s-coefficients must be natural numbers");
            any = any || ai != 0;
        }
        if (!any) throw InputError("hyperplane needs a nonzero s-part");
        if (b_ <= 0) throw InputError("hyperplane offset must be a positive integer");
    }

    const std::vector<Integer>& a() const { return a_; }
    const Integer& b() const { return b_; }
    int r() const { return static_cast<int>(a_.size()); }

    Integer content() const {
        Integer g = b_;
        for (auto& ai : a_) g = gcd(g, ai);
        return g < 0 ? Integer(-g) : g;
    }

    HyperplaneComponent content_normalized() const {
        Integer g = content();
        std::vector<Integer> a2;
        a2.reserve(a_.size());
        for (auto& ai : a_) a2.push_back(exact_div(ai, g));
        return HyperplaneComponent(std::move(a2), exact_div(b_, g));
    }

    bool same_hyperplane(const HyperplaneComponent& o) const {
        return content_normalized() == o.content_normalized();
    }

    MultiPoly poly(const Signature& sig) const {
        if (sig.r() != r()) throw InputError("hyperplane arity does not match the signature");
        MultiPoly p = MultiPoly::constant(sig, Rational(b_));
        for (int j = 0; j < r(); ++j)
            if (a_[j] != 0) p += MultiPoly::var(sig, sig.s_index(j)).scaled(Rational(a_[j]));
        return p;
    }

    std::string str() const {
        std::string out;
        for (int j = 0; j < r(); ++j) {
            if (a_[j] == 0) continue;
            if (!out.empty()) out += " + ";
            if (a_[j] != 1) out += a_[j].get_str() + "*";
            out += r() == 1 ? "s" : "s" + std::to_string(j + 1);
        }
        return out + " + " + b_.get_str();
    }

    friend bool operator==(const HyperplaneComponent& x, const HyperplaneComponent& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const HyperplaneComponent& x, const HyperplaneComponent& y) {
        return !(x == y);
    }
    friend bool operator<(const HyperplaneComponent& x, const HyperplaneComponent& y) {
        if (x.a_ != y.a_) return x.a_ < y.a_;
        return x.b_ < y.b_;
    }

private:
    std::vector<Integer> a_;
    Integer b_;
};

// { t in (C*)^r : prod_j t_j^{a'_j} = exp(2 pi i theta) } with a' primitive
// and theta rational in [0, 1). Canonical form: the first nonzero direction
// entry is positive (flipping the direction conjugates the angle).
class TorsionSubtorus {
public:
    TorsionSubtorus(std::vector<Integer> direction, Rational theta)
        : dir_(std::move(direction)), theta_(detail::mod_one(theta)) {
        Integer g = 0;
        bool any = false;
        for (auto& d : dir_) {
            g = gcd(g, d);
            any = any || d != 0;
        }
        if (!any) throw InputError("subtorus direction must be nonzero");
        if (g < 0) g = -g;
        if (g != 1) throw InputError("subtorus direction must be primitive");
        for (auto& d : dir_) {
            if (d == 0) continue;
            if (d < 0) {
                for (auto& e : dir_) e = -e;
                theta_ = detail::mod_one(-theta_);
            }
            break;
        }
    }

    const std::vector<Integer>& direction() const { return dir_; }
    const Rational& theta() const { return theta_; }
    int r() const { return static_cast<int>(dir_.size()); }

    std::string str() const {
        std::string lhs;
        for (int j = 0; j < r(); ++j) {
            if (dir_[j] == 0) continue;
            if (!lhs.empty()) lhs += "*";
            lhs += r() == 1 ? "t" : "t" + std::to_string(j + 1);
            if (dir_[j] != 1) lhs += "^" + dir_[j].get_str();
        }
        std::string rhs;
        if (theta_.is_zero())
            rhs = "1";
        else if (theta_ == Rational(1, 2))
            rhs = "-1";
        else
            rhs = "exp(2*pi*i*" + theta_.str() + ")";
        return "{" + lhs + " = " + rhs + "}";
    }

    friend bool operator==(const TorsionSubtorus& x, const TorsionSubtorus& y) {
        return x.dir_ == y.dir_ && x.theta_ == y.theta_;
    }
    friend bool operator!=(const TorsionSubtorus& x, const TorsionSubtorus& y) {
        return !(x == y);
    }
    friend bool operator<(const TorsionSubtorus& x, const TorsionSubtorus& y) {
        if (x.dir_ != y.dir_) return x.dir_ < y.dir_;
        return x.theta_ < y.theta_;
    }

private:
    std::vector<Integer> dir_;
    Rational theta_;
};

// Exp({a.s + b = 0}): with d = gcd(a), the subtorus in direction a/d
// translated by exp(2 pi i (-b/d)). Integer translates of b collapse, which
// is exactly why only the hyperplane mod Z^r matters.
inline TorsionSubtorus exp_image(const HyperplaneComponent& h) {
    Integer d = 0;
    for (auto& ai : h.a()) d = gcd(d, ai);
    std::vector<Integer> dir;
    dir.reserve(h.a().size());
    for (auto& ai : h.a()) dir.push_back(exact_div(ai, d));
    return TorsionSubtorus(std::move(dir), Rational(-h.b(), d));
}

// Finite union of codimension-one torsion-translated subtori, canonically
// sorted and duplicate-free, so equality is bit-exact.
class SupportLocus {
public:
    SupportLocus(int r, std::vector<TorsionSubtorus> components)
        : r_(r), components_(std::move(components)) {
        if (r_ <= 0) throw InputError("support locus rank must be positive");
        for (auto& c : components_)
            if (c.r() != r_) throw InputError("component rank mismatch in support locus");
        std::sort(components_.begin(), components_.end());
        components_.erase(std::unique(components_.begin(), components_.end()),
                          components_.end());
    }

    int r() const { return r_; }
    const std::vector<TorsionSubtorus>& components() const { return components_; }

    std::string str() const {
        if (components_.empty()) return "{}";
        std::string out;
        for (auto& c : components_) {
            if (!out.empty()) out += " u ";
            out += c.str();
        }
        return out;
    }

    friend bool operator==(const SupportLocus& x, const SupportLocus& y) {
        return x.r_ == y.r_ && x.components_ == y.components_;
    }
    friend bool operator!=(const SupportLocus& x, const SupportLocus& y) { return !(x == y); }

private:
    int r_;
    std::vector<TorsionSubtorus> components_;
};

inline SupportLocus locus_union(const SupportLocus& u, const SupportLocus& v) {
    if (u.r() != v.r()) throw InputError("support loci have different rank");
    std::vector<TorsionSubtorus> cs = u.components();
    cs.insert(cs.end(), v.components().begin(), v.components().end());
    return SupportLocus(u.r(), std::move(cs));
}

inline bool locus_equal(const SupportLocus& u, const SupportLocus& v) {
    if (u.r() != v.r()) throw InputError("support loci have different rank");
    return u == v;
}

// Codimension-one decomposition of Z(B): certified hyperplane components of
// type a.s + b (a natural, b positive), plus everything that could not be
// certified, returned verbatim rather than dropped.
struct LocusDecomposition {
    std::vector<HyperplaneComponent> components;
    std::vector<MultiPoly> unresolved;
};

inline LocusDecomposition locus_components(const BSIdeal& B) {
    if (B.generators.empty())
        throw InputError("the zero ideal has no locus decomposition");
    for (auto& g : B.generators)
        if (g.is_zero()) throw InputError("the zero ideal has no locus decomposition");
    const Signature& sig = B.generators.front().signature();

    // Linear factors of the first generator that divide every other
    // generator cut out the codimension-one part; those of the right shape
    // are certified components.
    Factorization first = linear_factorization(B.generators.front());
    LocusDecomposition out;
    for (auto& [form, mult] : first.factors) {
        MultiPoly fp = form.poly(sig);
        bool everywhere = true;
        for (std::size_t i = 1; i < B.generators.size(); ++i)
            everywhere = everywhere && divides(fp, B.generators[i]);
        if (!everywhere) continue;
        bool natural = form.b() > 0;
        for (auto& ai : form.a()) natural = natural && ai >= 0;
        if (natural) out.components.emplace_back(form.a(), form.b());
        // common linear factors of the wrong shape stay in the residuals
    }
    std::sort(out.components.begin(), out.components.end());

    // Residual of each generator after dividing the certified components out.
    for (auto& g : B.generators) {
        MultiPoly h = g;
        for (auto& comp : out.components) {
            MultiPoly cp = comp.poly(sig);
            for (;;) {
                auto quo = try_exact_divide(h, cp);
                if (!quo) break;
                h = *quo;
            }
        }
        if (h.is_constant()) continue;
        h = h.primitive_part().sign_normalized();
        if (std::find(out.unresolved.begin(), out.unresolved.end(), h) == out.unresolved.end())
            out.unresolved.push_back(h);
    }
    return out;
}

namespace detail {

// p with the variable `var` replaced by an arbitrary polynomial, by Horner
// evaluation in that variable.
inline MultiPoly substitute_var(const MultiPoly& p, int var, const MultiPoly& value) {
    if (p.is_zero()) return p;
    unsigned d = p.degree_in(var);
    MultiPoly out = p.coefficient_in(var, d);
    for (unsigned k = d; k-- > 0;) out = out * value + p.coefficient_in(var, k);
    return out;
}

// Does g vanish identically on { a.s + b = 0 }? Decided exactly by solving
// the hyperplane equation for its first involved variable and substituting.
inline bool vanishes_on_hyperplane(const MultiPoly& g, const std::vector<Integer>& a,
                                   const Integer& b) {
    const Signature& sig = g.signature();
    if (static_cast<int>(a.size()) != sig.r())
        throw InputError("hyperplane arity does not match the signature");
    int pivot = -1;
    for (int j = 0; j < sig.r(); ++j)
        if (a[j] != 0) {
            pivot = j;
            break;
        }
    if (pivot < 0) throw InputError("hyperplane needs a nonzero s-part");
    Rational scale = Rational(-1) / Rational(a[pivot]);
    MultiPoly value = MultiPoly::constant(sig, Rational(b) * scale);
    for (int j = 0; j < sig.r(); ++j) {
        if (j == pivot || a[j] == 0) continue;
        value += MultiPoly::var(sig, sig.s_index(j)).scaled(Rational(a[j]) * scale);
    }
    return substitute_var(g, sig.s_index(pivot), value).is_zero();
}

// Is V(g) contained in { lam = 0 } for the linear form lam = a.s + c? For a
// single generator this holds exactly when g is a constant times a power of
// lam, certified by repeated exact division.
inline bool variety_inside_hyperplane(const MultiPoly& g, const std::vector<Integer>& a,
                                      const Integer& c) {
    const Signature& sig = g.signature();
    MultiPoly lam = MultiPoly::constant(sig, Rational(c));
    for (int j = 0; j < sig.r(); ++j)
        if (a[j] != 0) lam += MultiPoly::var(sig, sig.s_index(j)).scaled(Rational(a[j]));
    MultiPoly h = g;
    for (;;) {
        auto quo = try_exact_divide(h, lam);
        if (!quo) break;
        h = *quo;
    }
    return h.is_constant() && h != g;
}

}  // namespace detail

// Executable form of the structure statements: every certified component has
// natural coefficients, positive offset, and a positive coefficient at some
// index where m is nonzero; unresolved pieces are searched for an integer
// translate landing inside a certified component. A failed search is
// reported as unverified within the box, never as a violation.
struct StructureReport {
    LocusDecomposition locus;
    bool components_ok = true;
    bool translations_ok = true;
    bool passed = false;
    std::vector<std::string> notes;

    std::string str() const {
        std::string out;
        for (auto& n : notes) out += n + "\n";
        out += passed ? "structure checks passed\n" : "structure checks FAILED\n";
        return out;
    }
};

inline StructureReport check_structure(const BSIdeal& B, const MultiIndex& m, long box = 10) {
    StructureReport rep;
    rep.locus = locus_components(B);
    const Signature& sig = B.generators.front().signature();
    if (static_cast<int>(m.size()) != sig.r())
        throw InputError("multi-index length does not match the ideal");
    if (box < 0) throw InputError("translation box must be non-negative");

    for (auto& comp : rep.locus.components) {
        bool cond = false;
        for (int j = 0; j < comp.r(); ++j) cond = cond || (m[j] != 0 && comp.a()[j] > 0);
        if (cond) {
            rep.notes.push_back("component " + comp.str() + ": shape and m-support conditions hold");
        } else {
            rep.components_ok = false;
            rep.notes.push_back("component " + comp.str() +
                                ": FAILS the support condition (no index with m_i != 0 and a_i > 0)");
        }
    }

    if (rep.locus.unresolved.empty()) {
        rep.notes.push_back(B.generators.size() == 1
                                ? "generator fully split into hyperplanes; deeper components "
                                  "absent, translation property holds vacuously"
                                : "all generators certified against the hyperplane components");
    }
    for (auto& g : rep.locus.unresolved) {
        bool found = false;
        std::vector<long> v(static_cast<std::size_t>(sig.r()), -box);
        while (!found) {
            for (std::size_t ci = 0; ci < rep.locus.components.size() && !found; ++ci) {
                const auto& comp = rep.locus.components[ci];
                // translating V(g) by v lands in {a.s + b = 0} iff
                // a.s + b + a.v vanishes on V(g)
                Integer shift = comp.b();
                for (int j = 0; j < sig.r(); ++j) shift += comp.a()[j] * Integer(v[j]);
                if (detail::variety_inside_hyperplane(g, comp.a(), shift)) {
                    std::string vs;
                    for (std::size_t j = 0; j < v.size(); ++j)
                        vs += (j ? "," : "") + std::to_string(v[j]);
                    rep.notes.push_back("unresolved " + g.str() + ": translate v=(" + vs +
                                        ") lands inside component " + comp.str());
                    found = true;
                }
            }
            if (found) break;
            std::size_t j = 0;
            while (j < v.size() && v[j] == box) {
                v[j] = -box;
                ++j;
            }
            if (j == v.size()) break;
            ++v[j];
        }
        if (!found) {
            rep.translations_ok = false;
            rep.notes.push_back("unresolved " + g.str() + ": not verified within box " +
                                std::to_string(box) + " (not a violation)");
        }
    }
    rep.passed = rep.components_ok && rep.translations_ok;
    return rep;
}

// Pullback of a support locus along lambda -> (lambda^{m_1},...,lambda^{m_r}):
// per component the solutions of lambda^M = exp(2 pi i theta) with
// M = a'.m, as explicit rational angles. M = 0 with theta = 0 means the
// whole circle, flagged rather than enumerated.
struct DiagonalSpecialization {
    bool whole_circle = false;
    std::vector<Rational> angles;  // sorted, duplicate-free, in [0, 1)

    std::string str() const {
        if (whole_circle) return "all of C*";
        if (angles.empty()) return "empty";
        std::string out;
        for (auto& t : angles) {
            if (!out.empty()) out += ", ";
            out += t.str();
        }
        return "angles {" + out + "}";
    }
};

inline DiagonalSpecialization diagonal_specialization(const SupportLocus& L,
                                                      const MultiIndex& m) {
    if (static_cast<int>(m.size()) != L.r())
        throw InputError("weight vector length does not match the locus rank");
    for (auto mi : m)
        if (mi == 0) throw InputError("diagonal weights must be positive");
    DiagonalSpecialization out;
    for (auto& comp : L.components()) {
        Integer M = 0;
        for (int j = 0; j < L.r(); ++j)
            M += comp.direction()[j] * Integer(static_cast<long>(m[j]));
        if (M == 0) {
            if (comp.theta().is_zero()) out.whole_circle = true;
            continue;  // no solutions otherwise
        }
        Integer count = M < 0 ? Integer(-M) : M;
        for (Integer k = 0; k < count; ++k)
            out.angles.push_back(detail::mod_one((comp.theta() + Rational(k)) / Rational(M)));
    }
    std::sort(out.angles.begin(), out.angles.end());
    out.angles.erase(std::unique(out.angles.begin(), out.angles.end()), out.angles.end());
    return out;
}

// Exp(Z(B)) as a support locus. Defined only when the decomposition is
// complete; deeper components never contribute because integer translation
// dies in the Exp image.
inline SupportLocus exp_locus(const BSIdeal& B) {
    LocusDecomposition dec = locus_components(B);
    if (!dec.unresolved.empty()) {
        std::string what = "exp locus blocked by unresolved generators:";
        for (auto& g : dec.unresolved) what += " (" + g.str() + ")";
        throw InputError(what);
    }
    std::vector<TorsionSubtorus> comps;
    comps.reserve(dec.components.size());
    for (auto& h : dec.components) comps.push_back(exp_image(h));
    return SupportLocus(B.generators.front().signature().r(), std::move(comps));
}

}  // namespace bsideal
