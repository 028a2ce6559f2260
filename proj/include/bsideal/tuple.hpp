#pragma once

// The input to everything: an ordered tuple F = (f_1, ..., f_r) of nonzero
// polynomials in the x-variables, plus integer multi-indices m for the shifted
// ideals. Tuples are immutable once constructed.

#include <string>
#include <vector>

#include "errors.hpp"
#include "multipoly.hpp"
#include "signature.hpp"

namespace bsideal {

using MultiIndex = std::vector<unsigned>;

class InputTuple {
public:
    InputTuple(Signature sig, std::vector<MultiPoly> fs)
        : sig_(std::move(sig)), fs_(std::move(fs)) {
        if (sig_.extended())
            throw InputError("input tuples live in the plain (non-t) signature");
        if (static_cast<int>(fs_.size()) != sig_.r())
            throw InputError("tuple length does not match the signature's s-count");
        bool any_nonconstant = false;
        for (auto& f : fs_) {
            require_same_signature(f.signature(), sig_);
            if (f.is_zero()) throw InputError("tuple entries must be nonzero");
            if (!f.uses_only(sig_.x_block()))
                throw InputError("tuple entries must be polynomials in the x-variables");
            any_nonconstant = any_nonconstant || !f.is_constant();
        }
        if (!any_nonconstant)
            throw InputError("at least one tuple entry must be non-constant");
    }

    const Signature& signature() const { return sig_; }
    Signature extended_signature() const { return sig_.with_extended(true); }
    int r() const { return sig_.r(); }
    int n() const { return sig_.n(); }
    const MultiPoly& f(int j) const { return fs_.at(j); }
    const std::vector<MultiPoly>& fs() const { return fs_; }

    void check_multi_index(const MultiIndex& m) const {
        if (static_cast<int>(m.size()) != r())
            throw InputError("multi-index length does not match the tuple");
        bool any = false;
        for (auto mi : m) any = any || mi > 0;
        if (!any) throw InputError("multi-index must not be all zero");
    }

    // prod f_j^{m_j}
    MultiPoly power_product(const MultiIndex& m) const {
        check_multi_index(m);
        MultiPoly p = MultiPoly::one(sig_);
        for (int j = 0; j < r(); ++j) p *= fs_[j].pow(m[j]);
        return p;
    }

    std::string str() const {
        std::string out = "(";
        for (int j = 0; j < r(); ++j) {
            if (j) out += ", ";
            out += fs_[j].str();
        }
        return out + ")";
    }

private:
    Signature sig_;
    std::vector<MultiPoly> fs_;
};

}  // namespace bsideal
