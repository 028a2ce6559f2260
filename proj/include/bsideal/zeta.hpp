#pragma once

// Numerical data of an embedded resolution with simple normal crossings, the
// candidate polar locus of the associated multivariate zeta function, and an
// exact containment test of the candidates in a Bernstein-Sato zero locus.
// The engine never computes resolutions; the data is an input.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "multipoly.hpp"
#include "pipeline.hpp"
#include "rational.hpp"
#include "torus.hpp"

namespace bsideal {

// One exceptional or strict-transform divisor E: N_j is the order of f_j
// along E, nu is the multiplicity of the relative canonical divisor plus one.
struct ResolutionDivisor {
    std::vector<Integer> N;
    Integer nu;
    std::string label;
};

class ResolutionData {
public:
    ResolutionData(int r, std::vector<ResolutionDivisor> divisors, std::string label = "")
        : r_(r), label_(std::move(label)) {
        if (r_ <= 0) throw InputError("resolution data needs positive rank");
        for (auto& d : divisors) {
            if (static_cast<int>(d.N.size()) != r_)
                throw InputError("divisor multiplicity vector does not match the rank");
            bool any = false;
            for (auto& Nj : d.N) {
                if (Nj < 0) throw InputError("divisor multiplicities must be natural numbers");
                any = any || Nj != 0;
            }
            if (d.nu < 1) throw InputError("divisor discrepancy nu must be at least 1");
            if (!any) continue;  // divisors not meeting any f_j carry no pole data
            divisors_.push_back(std::move(d));
        }
    }

    int r() const { return r_; }
    const std::vector<ResolutionDivisor>& divisors() const { return divisors_; }
    const std::string& label() const { return label_; }

private:
    int r_;
    std::vector<ResolutionDivisor> divisors_;
    std::string label_;
};

// Candidate poles: the hyperplanes { N_k . s + nu_k = 0 }, content-normalized
// and duplicate-free, each of the natural-coefficient positive-offset shape
// by construction.
inline std::vector<HyperplaneComponent> polar_candidates(const ResolutionData& R) {
    std::vector<HyperplaneComponent> out;
    for (auto& d : R.divisors()) {
        HyperplaneComponent h = HyperplaneComponent(d.N, d.nu).content_normalized();
        if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Exact evidence check for the polar-locus inclusion: a candidate hyperplane
// lies in Z(B) iff every generator of B vanishes identically on it. A
// candidate outside Z(B) is reported as candidate-only, never as a
// counterexample: candidate poles may cancel in the zeta function itself.
struct ConjectureReport {
    std::vector<HyperplaneComponent> candidates;
    std::vector<bool> contained;  // parallel to candidates
    bool all_contained = false;
    std::vector<std::string> notes;

    std::string str() const {
        std::string out;
        for (auto& n : notes) out += n + "\n";
        out += all_contained ? "all candidates contained in Z(B)\n"
                             : "some candidates outside Z(B) (candidate-only, not a "
                               "counterexample)\n";
        return out;
    }
};

inline ConjectureReport conjecture_check(const ResolutionData& R, const BSIdeal& B) {
    if (B.generators.empty()) throw InputError("the zero ideal has no zero locus");
    for (auto& g : B.generators)
        if (g.is_zero()) throw InputError("the zero ideal has no zero locus");
    const Signature& sig = B.generators.front().signature();
    if (R.r() != sig.r())
        throw InputError("resolution rank does not match the ideal");

    ConjectureReport rep;
    rep.candidates = polar_candidates(R);
    rep.all_contained = true;
    for (auto& h : rep.candidates) {
        bool inside = true;
        for (auto& g : B.generators)
            inside = inside && detail::vanishes_on_hyperplane(g, h.a(), h.b());
        rep.contained.push_back(inside);
        rep.all_contained = rep.all_contained && inside;
        rep.notes.push_back("candidate " + h.str() +
                            (inside ? ": contained in Z(B)"
                                    : ": not contained (candidate-only)"));
    }
    return rep;
}

}  // namespace bsideal
