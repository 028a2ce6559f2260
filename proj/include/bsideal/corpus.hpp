#pragma once

// The built-in cross-validation corpus: the tuples whose Bernstein-Sato data
// this engine can certify end to end. Every entry is small enough that the
// elimination pipeline and the linear-algebra oracle both finish with the
// default budgets, so each output is double-checked by two independent code
// paths ("bsideal suite" runs exactly this list).

#include <string>
#include <vector>

#include "tuple.hpp"

namespace bsideal {

struct CorpusEntry {
    std::string name;                // display label
    std::vector<std::string> polys;  // tuple entries, parser syntax
    MultiIndex m;                    // shift multi-index
};

inline const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = {
        // One polynomial: classical b-functions.
        {"x", {"x"}, {1}},
        {"x^2", {"x^2"}, {1}},
        {"x^3", {"x^3"}, {1}},
        {"x^4", {"x^4"}, {1}},
        {"x^2+y^2", {"x^2 + y^2"}, {1}},
        {"x^2+y^3", {"x^2 + y^3"}, {1}},
        {"x*y", {"x*y"}, {1}},
        // Pairs: multivariate ideals at the shifts the union formula needs.
        {"(x, y) m=(1,1)", {"x", "y"}, {1, 1}},
        {"(x, y) m=(1,0)", {"x", "y"}, {1, 0}},
        {"(x, y) m=(0,1)", {"x", "y"}, {0, 1}},
        {"(x, x) m=(1,1)", {"x", "x"}, {1, 1}},
        {"(x, x) m=(1,0)", {"x", "x"}, {1, 0}},
        {"(x, x+y) m=(1,1)", {"x", "x + y"}, {1, 1}},
        {"(x, x+y) m=(1,0)", {"x", "x + y"}, {1, 0}},
        {"(x, x+y) m=(0,1)", {"x", "x + y"}, {0, 1}},
        {"(x, x*y) m=(1,1)", {"x", "x*y"}, {1, 1}},
        {"(x, x*y) m=(1,0)", {"x", "x*y"}, {1, 0}},
        {"(x, x*y) m=(0,1)", {"x", "x*y"}, {0, 1}},
    };
    return entries;
}

}  // namespace bsideal
