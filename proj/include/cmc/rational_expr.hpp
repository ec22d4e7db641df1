#pragma once

#include "cmc/poly.hpp"

namespace cmc {

// Quotient of a polynomial by a product of polynomial factors. The
// denominator is kept factored so cancellations stay cheap: factors are
// content-free with positive leading coefficient, and rational content is
// folded into the numerator.
struct RationalExpr {
    MultiPoly num;
    std::vector<std::pair<MultiPoly, unsigned>> den;

    bool is_poly() const { return den.empty(); }
    bool is_zero() const { return num.is_zero(); }
};

RationalExpr rat_of(const MultiPoly& p);
RationalExpr rat_quotient(const MultiPoly& num, const MultiPoly& den);

RationalExpr rat_add(const RationalExpr& a, const RationalExpr& b);
RationalExpr rat_sub(const RationalExpr& a, const RationalExpr& b);
RationalExpr rat_mul(const RationalExpr& a, const RationalExpr& b);
RationalExpr rat_mul(const RationalExpr& a, const MultiPoly& p);
RationalExpr rat_div(const RationalExpr& a, const MultiPoly& d);
RationalExpr rat_neg(const RationalExpr& a);
RationalExpr rat_scale(const RationalExpr& a, const Q& k);

// Cancel denominator factors that divide the numerator exactly.
RationalExpr rat_reduce(const RationalExpr& a);

// Numerator and expanded denominator of the reduced expression.
MultiPoly rat_numerator(const RationalExpr& a);
MultiPoly rat_denominator(const RationalExpr& a);

// Reduced expression must have an empty denominator; throws not_divisible.
MultiPoly rat_as_poly(const RationalExpr& a);

// a - b == 0 as rational functions (cross-multiplied).
bool rat_equal(const RationalExpr& a, const RationalExpr& b);

std::string to_text(const RationalExpr& a, const SymbolTable& table);

} // namespace cmc
