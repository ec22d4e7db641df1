#pragma once

#include "cmc/determinant.hpp"
#include "cmc/rational_expr.hpp"

namespace cmc {

// A nonvanishing assumption accumulated while eliminating: the run is valid
// wherever every recorded expr is nonzero.
struct SideCondition {
    MultiPoly expr;
    std::string reason;
};

struct SylvesterMatrix {
    PolyMatrix mat;
    int m = 0; // deg_x(f)
    int n = 0; // deg_x(g)
    SymbolId eliminated = -1;
};

// Rows 0..n-1 shift the coefficients of f, rows n..n+m-1 those of g, each
// listed from the leading coefficient down.
SylvesterMatrix sylvester_matrix(const MultiPoly& f, const MultiPoly& g, SymbolId x);

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, SymbolId x,
                    DetStrategy s = DetStrategy::Auto);

// Determinant of the 2x2 coefficient matrix of two expressions homogeneous
// linear in {x, y}; its vanishing is necessary for a nontrivial solution.
MultiPoly dependency_determinant(const MultiPoly& eq1, const MultiPoly& eq2, SymbolId x,
                                 SymbolId y);

// Numerator of the reduced expression plus the denominator != 0 assumption.
std::pair<MultiPoly, SideCondition> clear_denominators(const RationalExpr& e);

// Substitute the root of `relation` (which must be linear in x with nonzero
// coefficient) into p, clear the denominator and divide out the full content
// in that coefficient. The result contains no x.
MultiPoly eliminate_linear(const MultiPoly& p, const MultiPoly& relation, SymbolId x);

// Pseudo-remainder of f by g in x: repeatedly cross-multiplies by the leading
// coefficient of g, so the result is lc(g)^k * (f mod g) without fractions.
MultiPoly pseudo_remainder(const MultiPoly& f, const MultiPoly& g, SymbolId x);

// Replace x^2 by `square` everywhere (p must have even degree in x or the
// odd part is returned separately via the second member).
std::pair<MultiPoly, MultiPoly> split_even_odd(const MultiPoly& p, SymbolId x);
MultiPoly substitute_square(const MultiPoly& p, SymbolId x, const MultiPoly& square);

} // namespace cmc
