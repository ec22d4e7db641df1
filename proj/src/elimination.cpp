#include "cmc/elimination.hpp"

namespace cmc {

SylvesterMatrix sylvester_matrix(const MultiPoly& f, const MultiPoly& g, SymbolId x) {
    int m = std::max(degree_in(f, x), 0);
    int n = std::max(degree_in(g, x), 0);
    if (m == 0 && n == 0) throw both_constant("both inputs constant in the eliminated symbol");
    auto fc = as_univariate(f, x); // fc[k] multiplies x^k
    auto gc = as_univariate(g, x);
    SylvesterMatrix s;
    s.m = m;
    s.n = n;
    s.eliminated = x;
    size_t dim = static_cast<size_t>(m + n);
    s.mat = make_matrix(dim);
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k)
            s.mat.at(static_cast<size_t>(row), static_cast<size_t>(row + k)) =
                fc[static_cast<size_t>(m - k)];
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k)
            s.mat.at(static_cast<size_t>(n + row), static_cast<size_t>(row + k)) =
                gc[static_cast<size_t>(n - k)];
    return s;
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, SymbolId x, DetStrategy s) {
    return determinant(sylvester_matrix(f, g, x).mat, s);
}

MultiPoly dependency_determinant(const MultiPoly& eq1, const MultiPoly& eq2, SymbolId x,
                                 SymbolId y) {
    for (const MultiPoly* eq : {&eq1, &eq2})
        for (const auto& t : eq->t) {
            unsigned total = unsigned(t.m.exp(x)) + unsigned(t.m.exp(y));
            if (total != 1)
                throw not_linear("term is not homogeneous linear in the two unknowns");
        }
    MultiPoly c11 = coeff_in(eq1, x, 1);
    MultiPoly c12 = coeff_in(eq1, y, 1);
    MultiPoly c21 = coeff_in(eq2, x, 1);
    MultiPoly c22 = coeff_in(eq2, y, 1);
    return sub(mul(c11, c22), mul(c12, c21));
}

std::pair<MultiPoly, SideCondition> clear_denominators(const RationalExpr& e) {
    RationalExpr r = rat_reduce(e);
    MultiPoly den = rat_denominator(r);
    return {r.num, SideCondition{den, "denominator nonzero"}};
}

MultiPoly eliminate_linear(const MultiPoly& p, const MultiPoly& relation, SymbolId x) {
    if (degree_in(relation, x) != 1)
        throw not_linear_in_target("relation is not degree 1 in the target");
    MultiPoly d = coeff_in(relation, x, 1);
    MultiPoly rest = coeff_in(relation, x, 0);
    auto coeffs = as_univariate(p, x);
    size_t deg = coeffs.size() - 1;
    // p(x) with x = -rest/d, multiplied through by d^deg.
    MultiPoly acc;
    MultiPoly neg_rest = neg(rest);
    for (size_t k = 0; k <= deg; ++k) {
        MultiPoly term = mul(coeffs[k], pow_u(neg_rest, static_cast<unsigned>(k)));
        term = mul(term, pow_u(d, static_cast<unsigned>(deg - k)));
        acc = add(acc, term);
    }
    if (d.is_constant()) return acc;
    MultiPoly q;
    while (!acc.is_zero() && try_exact_divide(acc, d, q)) acc = q;
    return acc;
}

MultiPoly pseudo_remainder(const MultiPoly& f, const MultiPoly& g, SymbolId x) {
    int e = degree_in(g, x);
    if (e <= 0) throw not_linear_in_target("divisor is constant in the eliminated symbol");
    MultiPoly lcg = coeff_in(g, x, e);
    MultiPoly acc = f;
    int d = degree_in(acc, x);
    while (!acc.is_zero() && d >= e) {
        MultiPoly lcf = coeff_in(acc, x, d);
        MultiPoly shift = pow_u(poly_symbol(x), static_cast<unsigned>(d - e));
        acc = sub(mul(lcg, acc), mul(mul(lcf, shift), g));
        int nd = degree_in(acc, x);
        if (nd >= d) throw step_failure("pseudo-remainder failed to reduce the degree");
        d = nd;
    }
    return acc;
}

std::pair<MultiPoly, MultiPoly> split_even_odd(const MultiPoly& p, SymbolId x) {
    auto coeffs = as_univariate(p, x);
    MultiPoly even, odd;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        MultiPoly part = mul(coeffs[k], pow_u(poly_symbol(x), static_cast<unsigned>(k / 2) * 2));
        if (k % 2 == 0) {
            even = add(even, part);
        } else {
            odd = add(odd, part);
        }
    }
    return {even, odd};
}

MultiPoly substitute_square(const MultiPoly& p, SymbolId x, const MultiPoly& square) {
    auto coeffs = as_univariate(p, x);
    MultiPoly acc;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        if (k % 2 != 0) throw step_failure("odd power survives even-power substitution");
        acc = add(acc, mul(coeffs[k], pow_u(square, static_cast<unsigned>(k / 2))));
    }
    return acc;
}

} // namespace cmc
