#pragma once

#include "cmc/rational_expr.hpp"

#include <map>

namespace cmc {

// A derivation of the polynomial ring: linear, Leibniz, determined by its
// action on symbols. Symbols mapped to other symbols (opaque derivatives)
// participate in later eliminations like ordinary unknowns.
struct Derivation {
    std::string name;
    std::map<SymbolId, RationalExpr> rules;

    void set(SymbolId s, const MultiPoly& image) { rules[s] = rat_of(image); }
    void set(SymbolId s, const RationalExpr& image) { rules[s] = image; }
    void set_zero(SymbolId s) { rules[s] = RationalExpr{}; }

    RationalExpr apply(const MultiPoly& p) const;
    RationalExpr apply(const RationalExpr& e) const; // quotient rule
    // apply() that must land back in the polynomial ring.
    MultiPoly apply_poly(const MultiPoly& p) const;
};

bool check_leibniz(const Derivation& d, const MultiPoly& a, const MultiPoly& b);

} // namespace cmc
