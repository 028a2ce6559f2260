#pragma once

// Variable bookkeeping. A Signature fixes the ambient variable set once; every
// polynomial and operator carries one, and mixing signatures is an error.
//
// Flat slot layout (one exponent slot per generator):
//   x_1..x_n | d_1..d_n | t_1..t_r | dt_1..dt_r | s_1..s_r
// The t/dt slots exist only when the signature is extended (Malgrange stage).
// Commutative polynomials simply never populate the d/t/dt slots.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bsideal {

enum class VarKind { X, DX, T, DT, S };

class Signature {
public:
    Signature() : n_(0), r_(0), extended_(false) {}

    Signature(std::vector<std::string> x_names, int r, bool extended = false)
        : n_(static_cast<int>(x_names.size())),
          r_(r),
          extended_(extended),
          x_names_(std::move(x_names)) {
        if (n_ < 1) throw std::invalid_argument("signature needs at least one x-variable");
        if (r_ < 1) throw std::invalid_argument("signature needs at least one s-variable");
        for (std::size_t i = 0; i < x_names_.size(); ++i)
            for (std::size_t j = i + 1; j < x_names_.size(); ++j)
                if (x_names_[i] == x_names_[j])
                    throw std::invalid_argument("duplicate x-variable name " + x_names_[i]);
    }

    static Signature make(int n, int r, bool extended = false) {
        return Signature(default_x_names(n), r, extended);
    }

    // Conventional names: x, y, z for n <= 3, else x1..xn.
    static std::vector<std::string> default_x_names(int n) {
        if (n < 1) throw std::invalid_argument("need n >= 1");
        std::vector<std::string> names;
        if (n <= 3) {
            static const char* abc[3] = {"x", "y", "z"};
            for (int i = 0; i < n; ++i) names.push_back(abc[i]);
        } else {
            for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
        }
        return names;
    }

    int n() const { return n_; }
    int r() const { return r_; }
    bool extended() const { return extended_; }

    int vars() const { return 2 * n_ + (extended_ ? 2 * r_ : 0) + r_; }

    int x_index(int i) const { check(i, n_); return i; }
    int dx_index(int i) const { check(i, n_); return n_ + i; }
    int t_index(int j) const {
        require_extended(); check(j, r_);
        return 2 * n_ + j;
    }
    int dt_index(int j) const {
        require_extended(); check(j, r_);
        return 2 * n_ + r_ + j;
    }
    int s_index(int j) const { check(j, r_); return 2 * n_ + (extended_ ? 2 * r_ : 0) + j; }

    VarKind kind(int flat) const {
        if (flat < 0 || flat >= vars()) throw std::out_of_range("variable slot");
        if (flat < n_) return VarKind::X;
        if (flat < 2 * n_) return VarKind::DX;
        if (extended_) {
            if (flat < 2 * n_ + r_) return VarKind::T;
            if (flat < 2 * n_ + 2 * r_) return VarKind::DT;
        }
        return VarKind::S;
    }

    // Position of `flat` within its own block.
    int block_pos(int flat) const {
        switch (kind(flat)) {
            case VarKind::X: return flat;
            case VarKind::DX: return flat - n_;
            case VarKind::T: return flat - 2 * n_;
            case VarKind::DT: return flat - 2 * n_ - r_;
            case VarKind::S: return flat - 2 * n_ - (extended_ ? 2 * r_ : 0);
        }
        return -1;  // unreachable
    }

    std::string var_name(int flat) const {
        int p = block_pos(flat);
        switch (kind(flat)) {
            case VarKind::X: return x_names_[p];
            case VarKind::DX: return "d_" + x_names_[p];
            case VarKind::T: return r_ == 1 ? "t" : "t" + std::to_string(p + 1);
            case VarKind::DT: return r_ == 1 ? "d_t" : "d_t" + std::to_string(p + 1);
            case VarKind::S: return s_name(p);
        }
        return "?";
    }

    std::string s_name(int j) const {
        check(j, r_);
        return r_ == 1 ? "s" : "s" + std::to_string(j + 1);
    }

    const std::vector<std::string>& x_names() const { return x_names_; }

    // Bit masks over flat slots, used for term-order rows and block elimination.
    std::uint64_t x_block() const { return range_mask(0, n_); }
    std::uint64_t dx_block() const { return range_mask(n_, n_); }
    std::uint64_t t_block() const { return extended_ ? range_mask(2 * n_, r_) : 0; }
    std::uint64_t dt_block() const { return extended_ ? range_mask(2 * n_ + r_, r_) : 0; }
    std::uint64_t s_block() const {
        return range_mask(2 * n_ + (extended_ ? 2 * r_ : 0), r_);
    }
    std::uint64_t xd_block() const { return x_block() | dx_block(); }
    std::uint64_t tdt_block() const { return t_block() | dt_block(); }
    std::uint64_t op_block() const { return xd_block() | tdt_block(); }

    // Same tuple shape: n, r, names, extension flag.
    friend bool operator==(const Signature& a, const Signature& b) {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.extended_ == b.extended_ &&
               a.x_names_ == b.x_names_;
    }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

    // The same variables with the t/dt block added or removed.
    Signature with_extended(bool ext) const { return Signature(x_names_, r_, ext); }

private:
    static void check(int i, int bound) {
        if (i < 0 || i >= bound) throw std::out_of_range("variable index");
    }
    void require_extended() const {
        if (!extended_) throw std::logic_error("signature has no t-variables");
    }
    std::uint64_t range_mask(int from, int count) const {
        std::uint64_t m = 0;
        for (int i = 0; i < count; ++i) m |= std::uint64_t{1} << (from + i);
        return m;
    }

    int n_;
    int r_;
    bool extended_;
    std::vector<std::string> x_names_;
};

inline void require_same_signature(const Signature& a, const Signature& b) {
    if (a != b) throw std::invalid_argument("signature mismatch between operands");
}

// Exponent vector over a signature's flat slots. Plain commutative data; the
// non-commutative multiplication lives in weyl.hpp.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> e) : e_(std::move(e)) {}

    static Monomial unit(const Signature& sig) { return Monomial(sig.vars()); }
    static Monomial var(const Signature& sig, int flat, unsigned k = 1) {
        Monomial m(sig.vars());
        m.e_[flat] = k;
        return m;
    }

    int nvars() const { return static_cast<int>(e_.size()); }
    unsigned operator[](int i) const { return e_[i]; }
    unsigned& operator[](int i) { return e_[i]; }
    const std::vector<unsigned>& exponents() const { return e_; }

    bool is_unit() const {
        return std::all_of(e_.begin(), e_.end(), [](unsigned v) { return v == 0; });
    }

    unsigned total_degree() const {
        return std::accumulate(e_.begin(), e_.end(), 0u);
    }

    unsigned degree_on(std::uint64_t mask) const {
        unsigned d = 0;
        for (int i = 0; i < nvars(); ++i)
            if (mask >> i & 1) d += e_[i];
        return d;
    }

    bool touches(std::uint64_t mask) const { return degree_on(mask) > 0; }

    long weight(const std::vector<int>& row) const {
        long w = 0;
        for (int i = 0; i < nvars(); ++i) w += static_cast<long>(e_[i]) * row[i];
        return w;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial m(*this);
        for (int i = 0; i < nvars(); ++i) m.e_[i] += o.e_[i];
        return m;
    }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < nvars(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // this / o, assuming o.divides(*this).
    Monomial operator/(const Monomial& o) const {
        Monomial m(*this);
        for (int i = 0; i < nvars(); ++i) {
            if (o.e_[i] > m.e_[i]) throw std::domain_error("monomial division underflow");
            m.e_[i] -= o.e_[i];
        }
        return m;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m(a);
        for (int i = 0; i < m.nvars(); ++i) m.e_[i] = std::max(a.e_[i], b.e_[i]);
        return m;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }
    // Canonical storage order (not a term order): plain lex on the flat vector.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

private:
    std::vector<unsigned> e_;
};

}  // namespace bsideal
