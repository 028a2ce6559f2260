#pragma once

// Admissible term orders on the flat monomials: a list of integer weight rows
// compared first, then graded reverse lexicographic on the operator variables
// (x, d_x, t, d_t), then grevlex on the s-variables. Ranking s strictly below
// the operator block makes the s-variables behave like coefficients during
// reduction while the engine still works over the field Q.
//
// Admissibility here means the order is a well-order: every variable exceeds
// 1. That makes each x_i d_x_i exceed 1, so leading monomials of products
// behave as in the commutative case and Buchberger's loop terminates.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "signature.hpp"

namespace bsideal {

class TermOrder {
public:
    TermOrder(Signature sig, std::vector<std::vector<int>> weight_rows)
        : sig_(std::move(sig)), rows_(std::move(weight_rows)) {
        for (auto& row : rows_)
            if (static_cast<int>(row.size()) != sig_.vars())
                throw std::invalid_argument("weight row width does not match the signature");
        for (int v = 0; v < sig_.vars(); ++v) {
            if (sig_.kind(v) == VarKind::S)
                s_slots_.push_back(v);
            else
                op_slots_.push_back(v);
        }
        // Well-order check: the first weight row that sees a variable must
        // weigh it positively (variables no row sees fall to the grevlex
        // tiebreak, which already ranks them above 1).
        for (int v = 0; v < sig_.vars(); ++v) {
            for (auto& row : rows_) {
                if (row[v] == 0) continue;
                if (row[v] < 0)
                    throw std::invalid_argument(
                        "inadmissible term order: a variable would rank below 1");
                break;
            }
        }
    }

    // Pure grevlex (operator block first, then s).
    static TermOrder grevlex(const Signature& sig) { return TermOrder(sig, {}); }

    // One 0/1 weight row on `block`: every monomial touching the block ranks
    // above every monomial that does not, which is what elimination needs.
    static TermOrder eliminating(const Signature& sig, std::uint64_t block) {
        std::vector<int> row(sig.vars(), 0);
        for (int v = 0; v < sig.vars(); ++v)
            if (block >> v & 1) row[v] = 1;
        return TermOrder(sig, {row});
    }

    const Signature& signature() const { return sig_; }
    const std::vector<std::vector<int>>& weight_rows() const { return rows_; }

    // -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        for (auto& row : rows_) {
            long wa = a.weight(row), wb = b.weight(row);
            if (wa != wb) return wa < wb ? -1 : 1;
        }
        if (int c = grevlex_compare(a, b, op_slots_)) return c;
        return grevlex_compare(a, b, s_slots_);
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    // True when every monomial touching `block` outranks every monomial that
    // avoids it: some prefix of the weight rows is supported exactly inside
    // the block, with nonnegative entries covering all of it.
    bool eliminates(std::uint64_t block) const {
        if (block == 0) return true;
        std::uint64_t covered = 0;
        for (auto& row : rows_) {
            bool usable = true;
            for (int v = 0; v < sig_.vars(); ++v) {
                if (row[v] < 0 || (row[v] > 0 && !(block >> v & 1))) {
                    usable = false;
                    break;
                }
            }
            if (!usable) break;
            for (int v = 0; v < sig_.vars(); ++v)
                if (row[v] > 0) covered |= std::uint64_t(1) << v;
            if ((covered & block) == block) return true;
        }
        return (covered & block) == block;
    }

private:
    static int grevlex_compare(const Monomial& a, const Monomial& b,
                               const std::vector<int>& slots) {
        long da = 0, db = 0;
        for (int s : slots) {
            da += a[s];
            db += b[s];
        }
        if (da != db) return da < db ? -1 : 1;
        for (auto it = slots.rbegin(); it != slots.rend(); ++it) {
            if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
        }
        return 0;
    }

    Signature sig_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> op_slots_;
    std::vector<int> s_slots_;
};

}  // namespace bsideal
