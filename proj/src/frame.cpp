#include "cmc/frame.hpp"

namespace cmc {

RationalExpr Derivation::apply(const MultiPoly& p) const {
    RationalExpr acc;
    for (SymbolId x : support(p)) {
        auto it = rules.find(x);
        if (it == rules.end())
            throw missing_rule(name + " has no rule for symbol id " + std::to_string(x));
        if (it->second.is_zero()) continue;
        acc = rat_add(acc, rat_mul(it->second, partial_derivative(p, x)));
    }
    return acc;
}

RationalExpr Derivation::apply(const RationalExpr& e) const {
    // D(n/d) = D(n)/d - n*D(d)/d^2 applied per denominator factor.
    RationalExpr acc = apply(e.num);
    for (const auto& kv : e.den) {
        RationalExpr df = apply(kv.first);
        if (df.is_zero()) continue;
        RationalExpr term = rat_mul(df, rat_scale(rat_of(e.num), Q(kv.second)));
        term = rat_div(term, kv.first);
        acc = rat_sub(acc, term);
    }
    for (const auto& kv : e.den)
        for (unsigned i = 0; i < kv.second; ++i) acc = rat_div(acc, kv.first);
    return acc;
}

MultiPoly Derivation::apply_poly(const MultiPoly& p) const { return rat_as_poly(apply(p)); }

bool check_leibniz(const Derivation& d, const MultiPoly& a, const MultiPoly& b) {
    RationalExpr lhs = d.apply(mul(a, b));
    RationalExpr rhs = rat_add(rat_mul(d.apply(a), b), rat_mul(d.apply(b), a));
    return rat_equal(lhs, rhs);
}

} // namespace cmc
