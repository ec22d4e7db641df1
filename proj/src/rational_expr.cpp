#include "cmc/rational_expr.hpp"

#include <sstream>

namespace cmc {

namespace {

// Push one denominator factor, folding its content into the numerator side
// and merging with an existing equal factor.
void push_factor(RationalExpr& e, const MultiPoly& factor, unsigned mult) {
    if (mult == 0) return;
    if (factor.is_zero()) throw not_divisible("zero denominator factor");
    MultiPoly f = normalize(factor);
    Q c = content(factor);
    if (c != 1) {
        Q inv = 1 / c;
        Q acc = 1;
        for (unsigned i = 0; i < mult; ++i) acc *= inv;
        e.num = scale(e.num, acc);
    }
    if (f.is_constant()) return; // normalized constant is 1
    for (auto& kv : e.den) {
        if (kv.first == f) {
            kv.second += mult;
            return;
        }
    }
    e.den.push_back({std::move(f), mult});
}

} // namespace

RationalExpr rat_of(const MultiPoly& p) { return RationalExpr{p, {}}; }

RationalExpr rat_quotient(const MultiPoly& num, const MultiPoly& den) {
    RationalExpr e{num, {}};
    push_factor(e, den, 1);
    return rat_reduce(e);
}

RationalExpr rat_reduce(const RationalExpr& a) {
    RationalExpr e{a.num, {}};
    if (e.num.is_zero()) return e;
    for (const auto& kv : a.den) {
        unsigned mult = kv.second;
        MultiPoly q;
        while (mult > 0 && try_exact_divide(e.num, kv.first, q)) {
            e.num = q;
            --mult;
        }
        if (mult > 0) e.den.push_back({kv.first, mult});
    }
    return e;
}

RationalExpr rat_mul(const RationalExpr& a, const MultiPoly& p) {
    RationalExpr e{mul(a.num, p), a.den};
    return rat_reduce(e);
}

RationalExpr rat_div(const RationalExpr& a, const MultiPoly& d) {
    RationalExpr e = a;
    push_factor(e, d, 1);
    return rat_reduce(e);
}

RationalExpr rat_mul(const RationalExpr& a, const RationalExpr& b) {
    RationalExpr e{mul(a.num, b.num), a.den};
    for (const auto& kv : b.den) push_factor(e, kv.first, kv.second);
    return rat_reduce(e);
}

RationalExpr rat_neg(const RationalExpr& a) { return RationalExpr{neg(a.num), a.den}; }

RationalExpr rat_scale(const RationalExpr& a, const Q& k) {
    if (k == 0) return {};
    return RationalExpr{scale(a.num, k), a.den};
}

RationalExpr rat_add(const RationalExpr& a, const RationalExpr& b) {
    if (a.is_zero()) return rat_reduce(b);
    if (b.is_zero()) return rat_reduce(a);
    // Common denominator: max multiplicity per factor.
    RationalExpr e;
    std::vector<std::pair<MultiPoly, unsigned>> common = a.den;
    for (const auto& kv : b.den) {
        bool found = false;
        for (auto& ckv : common) {
            if (ckv.first == kv.first) {
                ckv.second = std::max(ckv.second, kv.second);
                found = true;
                break;
            }
        }
        if (!found) common.push_back(kv);
    }
    auto lift = [&common](const RationalExpr& x) {
        MultiPoly n = x.num;
        for (const auto& ckv : common) {
            unsigned have = 0;
            for (const auto& kv : x.den)
                if (kv.first == ckv.first) have = kv.second;
            if (ckv.second > have) n = mul(n, pow_u(ckv.first, ckv.second - have));
        }
        return n;
    };
    e.num = add(lift(a), lift(b));
    e.den = std::move(common);
    return rat_reduce(e);
}

RationalExpr rat_sub(const RationalExpr& a, const RationalExpr& b) {
    return rat_add(a, rat_neg(b));
}

MultiPoly rat_denominator(const RationalExpr& a) {
    MultiPoly d = poly_const(Q(1));
    for (const auto& kv : a.den) d = mul(d, pow_u(kv.first, kv.second));
    return d;
}

MultiPoly rat_numerator(const RationalExpr& a) { return rat_reduce(a).num; }

MultiPoly rat_as_poly(const RationalExpr& a) {
    RationalExpr e = rat_reduce(a);
    if (!e.den.empty()) throw not_divisible("expression is not polynomial");
    return e.num;
}

bool rat_equal(const RationalExpr& a, const RationalExpr& b) {
    return sub(mul(a.num, rat_denominator(b)), mul(b.num, rat_denominator(a))).is_zero();
}

std::string to_text(const RationalExpr& a, const SymbolTable& table) {
    if (a.den.empty()) return to_text(a.num, table);
    std::ostringstream os;
    os << "(" << to_text(a.num, table) << ") / (";
    bool first = true;
    for (const auto& kv : a.den) {
        if (!first) os << "*";
        first = false;
        os << "(" << to_text(kv.first, table) << ")";
        if (kv.second > 1) os << "^" << kv.second;
    }
    os << ")";
    return os.str();
}

} // namespace cmc
