#pragma once

// Linear-algebra cross-check for the elimination pipeline. Inside a fixed
// degree box this searches for an explicit operator P witnessing
//   b(s) * prod f_j^{s_j} = P * prod f_j^{s_j + m_j}
// by expanding both sides in the twisted module, clearing denominators and
// solving the resulting exact sparse linear system over Q. The same machinery
// with the coefficients of a monic b added as unknowns gives an independent
// b-function oracle: sweeping the degree upward finds the minimal monic b
// admitting a witness in the box, and any such b is a multiple of the true
// b-function, so pipeline results can be checked against it.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "multipoly.hpp"
#include "pipeline.hpp"
#include "rational.hpp"
#include "signature.hpp"
#include "tuple.hpp"
#include "weyl.hpp"

namespace bsideal {

// Degree box for the witness search: total degree in the d_x-variables, in
// the x-variables, and in the s-variables.
struct AnsatzBounds {
    int order = 4;
    int xdeg = 3;
    int sdeg = 3;

    void validate() const {
        if (order < 0 || xdeg < 0 || sdeg < 0)
            throw InputError("ansatz bounds must be non-negative");
    }
};

namespace detail {

constexpr std::size_t kAnsatzMaxColumns = 4000;
constexpr std::size_t kAnsatzMaxRows = 20000;

inline void bounded_exponents(int slots, int bound,
                              std::vector<std::vector<unsigned>>& out) {
    std::vector<unsigned> cur(slots, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == slots) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[pos] = static_cast<unsigned>(e);
            self(self, pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, bound);
}

// All monomials x^a d^b s^c within the box, sorted by total degree and then
// by the canonical monomial order. Low-degree operators come first, so the
// particular solution of the system below prefers simple witnesses.
inline std::vector<Monomial> ansatz_basis(const Signature& sig, const AnsatzBounds& bounds) {
    bounds.validate();
    std::vector<std::vector<unsigned>> xs, ds, ss;
    bounded_exponents(sig.n(), bounds.xdeg, xs);
    bounded_exponents(sig.n(), bounds.order, ds);
    bounded_exponents(sig.r(), bounds.sdeg, ss);
    std::vector<Monomial> ops;
    ops.reserve(xs.size() * ds.size() * ss.size());
    for (auto& de : ds)
        for (auto& xe : xs)
            for (auto& se : ss) {
                Monomial mono(sig.vars());
                for (int i = 0; i < sig.n(); ++i) {
                    mono[sig.x_index(i)] = xe[i];
                    mono[sig.dx_index(i)] = de[i];
                }
                for (int j = 0; j < sig.r(); ++j) mono[sig.s_index(j)] = se[j];
                ops.push_back(std::move(mono));
            }
    std::sort(ops.begin(), ops.end(), [](const Monomial& a, const Monomial& b) {
        unsigned da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a < b;
    });
    return ops;
}

// One equation per (x, s)-monomial; sparse rows over the unknown columns,
// with the right-hand side stored at column ncols.
struct AnsatzTableau {
    std::vector<Monomial> ops;
    std::map<Monomial, int> row_of;
    std::vector<std::map<int, Rational>> rows;
    MultiPoly fK;  // prod f_j^{K_j}, the cleared form of f^s itself

    int row_index(const Monomial& mono) {
        auto [it, fresh] = row_of.try_emplace(mono, static_cast<int>(rows.size()));
        if (fresh) rows.emplace_back();
        return it->second;
    }

    void add_poly(const MultiPoly& p, int col, bool negate = false) {
        for (auto& [mono, coef] : p.terms()) {
            Rational& slot = rows[static_cast<std::size_t>(row_index(mono))][col];
            if (negate)
                slot -= coef;
            else
                slot += coef;
        }
    }
};

inline AnsatzTableau build_tableau(const InputTuple& F, const MultiIndex& m,
                                   const AnsatzBounds& bounds) {
    const Signature& sig = F.signature();
    AnsatzTableau T;
    T.ops = ansatz_basis(sig, bounds);
    if (T.ops.size() > kAnsatzMaxColumns)
        throw ResourceError("ansatz-system",
                            std::to_string(T.ops.size()) + " unknowns exceed the cap of " +
                                std::to_string(kAnsatzMaxColumns));
    TwistedElement u = TwistedElement::power_product(F, m);
    std::vector<TwistedElement> images;
    images.reserve(T.ops.size());
    for (auto& op : T.ops)
        images.push_back(weyl_apply_twisted(WeylElement::term(sig, op, Rational(1)), F, u));
    std::vector<unsigned> K(static_cast<std::size_t>(F.r()), 0);
    for (auto& e : images)
        for (int j = 0; j < F.r(); ++j)
            K[j] = std::max(K[j], e.denominator_exponents()[j]);
    T.fK = MultiPoly::one(sig);
    for (int j = 0; j < F.r(); ++j) T.fK *= F.f(j).pow(K[j]);
    for (std::size_t c = 0; c < images.size(); ++c) {
        MultiPoly num = images[c].numerator();
        for (int j = 0; j < F.r(); ++j)
            num *= F.f(j).pow(K[j] - images[c].denominator_exponents()[j]);
        T.add_poly(num, static_cast<int>(c));
    }
    return T;
}

// Exact Gauss-Jordan on sparse rows. Pivot rows are chosen by the smallest
// numerator/denominator bit size (ties to the lowest row index); free
// unknowns are set to zero, so for a solvable system the result is the
// unique solution supported on the pivot columns. Returns nothing when the
// system is inconsistent.
inline std::optional<std::vector<Rational>> solve_sparse(
        int ncols, std::vector<std::map<int, Rational>> rows) {
    std::vector<int> pivot_of_col(static_cast<std::size_t>(ncols), -1);
    std::vector<bool> used(rows.size(), false);
    for (int col = 0; col < ncols; ++col) {
        int best = -1;
        std::size_t best_size = 0;
        for (std::size_t ri = 0; ri < rows.size(); ++ri) {
            if (used[ri]) continue;
            auto it = rows[ri].find(col);
            if (it == rows[ri].end() || it->second.is_zero()) continue;
            std::size_t sz = it->second.bit_size();
            if (best < 0 || sz < best_size) {
                best = static_cast<int>(ri);
                best_size = sz;
            }
        }
        if (best < 0) continue;
        used[static_cast<std::size_t>(best)] = true;
        pivot_of_col[static_cast<std::size_t>(col)] = best;
        auto& pivot = rows[static_cast<std::size_t>(best)];
        Rational inv = pivot.at(col).inverse();
        for (auto& entry : pivot) entry.second *= inv;
        for (std::size_t ri = 0; ri < rows.size(); ++ri) {
            if (static_cast<int>(ri) == best) continue;
            auto it = rows[ri].find(col);
            if (it == rows[ri].end() || it->second.is_zero()) continue;
            Rational factor = it->second;
            for (auto& [c, v] : pivot) rows[ri][c] -= factor * v;
            for (auto jt = rows[ri].begin(); jt != rows[ri].end();)
                jt = jt->second.is_zero() ? rows[ri].erase(jt) : std::next(jt);
        }
    }
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        if (used[ri]) continue;
        for (auto& [c, v] : rows[ri])
            if (!v.is_zero()) return std::nullopt;  // 0 = nonzero rhs
    }
    std::vector<Rational> sol(static_cast<std::size_t>(ncols));
    for (int col = 0; col < ncols; ++col) {
        int ri = pivot_of_col[static_cast<std::size_t>(col)];
        if (ri < 0) continue;
        auto it = rows[static_cast<std::size_t>(ri)].find(ncols);
        if (it != rows[static_cast<std::size_t>(ri)].end()) sol[static_cast<std::size_t>(col)] = it->second;
    }
    return sol;
}

inline void check_row_cap(std::size_t nrows, std::size_t ncols) {
    if (nrows > kAnsatzMaxRows)
        throw ResourceError("ansatz-system",
                            std::to_string(nrows) + " equations in " + std::to_string(ncols) +
                                " unknowns exceed the cap of " + std::to_string(kAnsatzMaxRows));
}

inline WeylElement solution_operator(const Signature& sig, const std::vector<Monomial>& ops,
                                     const std::vector<Rational>& sol) {
    WeylElement p = WeylElement::zero(sig);
    for (std::size_t c = 0; c < ops.size(); ++c)
        if (!sol[c].is_zero()) p += WeylElement::term(sig, ops[c], sol[c]);
    return p;
}

}  // namespace detail

// Search the degree box for P with b(s) prod f^s = P prod f^{s+m}. Returns
// the witness, re-verified against the twisted action, or nothing when no
// witness exists within the bounds (which proves nothing about membership).
inline std::optional<WeylElement> find_witness(const MultiPoly& b, const InputTuple& F,
                                               const MultiIndex& m, const AnsatzBounds& bounds) {
    const Signature& sig = F.signature();
    require_same_signature(b.signature(), sig);
    if (!b.uses_only(sig.s_block()))
        throw InputError("the candidate b must be a polynomial in the s-variables");
    F.check_multi_index(m);
    detail::AnsatzTableau T = detail::build_tableau(F, m, bounds);
    const int ncols = static_cast<int>(T.ops.size());
    T.add_poly(b * T.fK, ncols);  // right-hand side: b f^s on the common denominator
    detail::check_row_cap(T.rows.size(), T.ops.size());
    auto sol = detail::solve_sparse(ncols, std::move(T.rows));
    if (!sol) return std::nullopt;
    WeylElement p = detail::solution_operator(sig, T.ops, *sol);
    if (!verifies_functional_equation(F, m, b, p))
        throw std::logic_error("internal error: an ansatz witness failed re-verification");
    return p;
}

// Independent b-function oracle: the minimal-degree monic b(s) admitting a
// witness within the bounds, found by sweeping the degree upward from zero.
// Any returned polynomial is a multiple of the true b-function; it equals it
// exactly when the bounds are large enough to contain some witness for the
// true b-function. Returns nothing when even that fails.
inline std::optional<MultiPoly> oracle_bfunction(const MultiPoly& f, const AnsatzBounds& bounds) {
    InputTuple F = univariate_tuple(f);
    const Signature& sig = F.signature();
    detail::AnsatzTableau T = detail::build_tableau(F, MultiIndex{1}, bounds);
    const int nops = static_cast<int>(T.ops.size());
    // b = s^d + sum_{k<d} b_k s^k; the b_k join the operator coefficients as
    // unknowns, and the monic top term becomes the right-hand side.
    auto s_power = [&](unsigned k) {
        return MultiPoly::term(sig, Monomial::var(sig, sig.s_index(0), k), Rational(1));
    };
    const int dmax = bounds.order + bounds.sdeg;
    for (int d = 0; d <= dmax; ++d) {
        detail::AnsatzTableau S = T;
        for (int k = 0; k < d; ++k)
            S.add_poly(s_power(static_cast<unsigned>(k)) * S.fK, nops + k, /*negate=*/true);
        S.add_poly(s_power(static_cast<unsigned>(d)) * S.fK, nops + d);
        detail::check_row_cap(S.rows.size(), static_cast<std::size_t>(nops + d));
        auto sol = detail::solve_sparse(nops + d, std::move(S.rows));
        if (!sol) continue;
        MultiPoly b = s_power(static_cast<unsigned>(d));
        for (int k = 0; k < d; ++k)
            b += s_power(static_cast<unsigned>(k)).scaled((*sol)[static_cast<std::size_t>(nops + k)]);
        WeylElement p = detail::solution_operator(sig, T.ops, *sol);
        if (!verifies_functional_equation(F, MultiIndex{1}, b, p))
            throw std::logic_error("internal error: an oracle witness failed re-verification");
        return b;
    }
    return std::nullopt;
}

struct WitnessReport {
    MultiPoly generator;
    bool verified = false;
    std::optional<WeylElement> witness;
    std::string note;
};

struct CrossValidation {
    BSIdeal ideal;
    std::vector<WitnessReport> reports;
    std::optional<MultiPoly> oracle;  // independent minimal b, r = 1 and m = (1) only
    bool all_verified = false;

    std::string str() const {
        std::string out = "B = " + ideal.str() + "\n";
        for (auto& rep : reports)
            out += "  " + rep.generator.str() + ": " + rep.note + "\n";
        if (oracle) out += "  oracle b-function: " + oracle->str() + "\n";
        out += all_verified ? "  all generators verified\n" : "  not all generators verified\n";
        return out;
    }
};

// Check the pipeline's output against the linear-algebra route: an explicit
// witness per generator, plus the independent oracle in the classical case.
// A generator without a witness in the box is reported as unverified (the
// box may simply be too small); an oracle result that contradicts the
// pipeline is a hard failure, because both sides are exact.
inline CrossValidation cross_validate(const InputTuple& F, const MultiIndex& m,
                                      const AnsatzBounds& bounds = {},
                                      const Budget& budget = {}) {
    CrossValidation out{bs_ideal(F, m, budget), {}, std::nullopt, true};
    for (auto& g : out.ideal.generators) {
        WitnessReport rep{g, false, std::nullopt, ""};
        rep.witness = find_witness(g, F, m, bounds);
        rep.verified = rep.witness.has_value();
        rep.note = rep.verified ? "functional equation verified by explicit witness"
                                : "no witness within the given bounds (inconclusive)";
        out.all_verified = out.all_verified && rep.verified;
        out.reports.push_back(std::move(rep));
    }
    if (F.r() == 1 && m == MultiIndex{1}) {
        out.oracle = oracle_bfunction(F.f(0), bounds);
        if (out.oracle) {
            const MultiPoly& bp = out.ideal.generators.front();
            if (out.oracle->total_degree() < bp.total_degree() || !divides(bp, *out.oracle))
                throw std::logic_error(
                    "internal error: the linear-algebra oracle contradicts the elimination pipeline");
        }
    }
    return out;
}

}  // namespace bsideal
