#include "cmc/scenario.hpp"

#include <sstream>

namespace cmc {

std::string profile_text(const ScenarioProfile& pr) {
    std::ostringstream os;
    switch (pr.tag) {
    case CaseTag::FourA: os << "four-distinct"; break;
    case CaseTag::FourB: os << "four-distinct-common-slope"; break;
    case CaseTag::Three: os << "three-distinct"; break;
    case CaseTag::Two: os << "two-distinct"; break;
    }
    os << " multiplicities=(";
    auto one = [&](long m) {
        if (m > 0)
            os << m;
        else
            os << "sym";
    };
    if (pr.tag == CaseTag::FourA || pr.tag == CaseTag::FourB) {
        os << "1,";
        one(pr.p);
        os << ",";
        one(pr.q);
        os << ",";
        one(pr.r);
    } else if (pr.tag == CaseTag::Three) {
        os << "1,";
        one(pr.p);
        os << ",n-p-1";
    } else {
        os << "1,n-1";
    }
    os << ")";
    if (pr.tag == CaseTag::Three || pr.tag == CaseTag::Two) {
        os << " n=";
        one(pr.n);
    }
    if (pr.curvature)
        os << " c=" << q_text(*pr.curvature);
    if (pr.norm)
        os << " beta=" << q_text(*pr.norm);
    return os.str();
}

ScenarioContext make_context(const ScenarioProfile& pr) {
    ScenarioContext ctx;
    ctx.profile = pr;
    SymbolTable& t = ctx.table;
    Symbols& s = ctx.s;

    s.lam1 = t.register_symbol("lam1");
    s.lam_u = t.register_symbol("lam_u");
    s.lam_v = t.register_symbol("lam_v");
    s.lam_w = t.register_symbol("lam_w");
    s.lam = t.register_symbol("lam");
    s.w_uu1 = t.register_symbol("w_uu1");
    s.w_vv1 = t.register_symbol("w_vv1");
    s.w_ww1 = t.register_symbol("w_ww1");
    s.w_vv_u = t.register_symbol("w_vv_u");
    s.w_ww_u = t.register_symbol("w_ww_u");
    s.w_vu_w = t.register_symbol("w_vu_w");
    s.w_uv_w = t.register_symbol("w_uv_w");
    s.w_uw_v = t.register_symbol("w_uw_v");
    s.w_wu_v = t.register_symbol("w_wu_v");
    s.w_vw_u = t.register_symbol("w_vw_u");
    s.w_wv_u = t.register_symbol("w_wv_u");
    s.alpha = t.register_symbol("alpha");
    s.phi = t.register_symbol("phi");
    s.a1 = t.register_symbol("a1");
    s.L = t.register_symbol("L");
    s.A = t.register_symbol("A");
    s.B = t.register_symbol("B");
    s.C = t.register_symbol("C");
    s.D = t.register_symbol("D");
    s.mu = t.register_symbol("mu");
    s.beta = t.register_symbol("beta");
    s.c = t.register_symbol("c");
    s.p = t.register_symbol("p");
    s.q = t.register_symbol("q");
    s.r = t.register_symbol("r");
    s.n = t.register_symbol("n");
    s.H = t.register_symbol("H");
    s.e1_H = t.register_symbol("e1_H");
    s.e1_lam1 = t.register_symbol("e1_lam1");
    s.e1e1_lam1 = t.register_symbol("e1e1_lam1");
    s.e1_lam_u = t.register_symbol("e1_lam_u");
    s.e1_mu = t.register_symbol("e1_mu");
    s.e1_alpha = t.register_symbol("e1_alpha");
    s.e1_phi = t.register_symbol("e1_phi");
    s.eu_lam_u = t.register_symbol("eu_lam_u");
    s.eu_lam_v = t.register_symbol("eu_lam_v");
    s.eu_lam_w = t.register_symbol("eu_lam_w");
    s.eu_a1 = t.register_symbol("eu_a1");
    s.eu_w_uu1 = t.register_symbol("eu_w_uu1");
    s.eu_w_vv1 = t.register_symbol("eu_w_vv1");
    s.eu_w_ww1 = t.register_symbol("eu_w_ww1");
    s.ej_lam_u = t.register_symbol("ej_lam_u");
    s.ei_lam_v = t.register_symbol("ei_lam_v");
    s.w_uu_j = t.register_symbol("w_uu_j");
    s.w_vv_i = t.register_symbol("w_vv_i");
    s.w_ik_j = t.register_symbol("w_ik_j");
    s.w_ij_k = t.register_symbol("w_ij_k");
    s.w_ji_k = t.register_symbol("w_ji_k");
    s.w_jk_i = t.register_symbol("w_jk_i");
    s.f1 = t.register_symbol("f1");
    s.f2 = t.register_symbol("f2");
    s.f3 = t.register_symbol("f3");
    s.f4 = t.register_symbol("f4");
    s.f5 = t.register_symbol("f5");
    s.f6 = t.register_symbol("f6");
    s.f7 = t.register_symbol("f7");
    s.f8 = t.register_symbol("f8");
    s.g1 = t.register_symbol("g1");
    s.g2 = t.register_symbol("g2");
    s.b0 = t.register_symbol("b0");
    s.b1 = t.register_symbol("b1");
    s.b2 = t.register_symbol("b2");
    for (int i = 0; i < 14; ++i)
        s.v[i] = t.register_symbol("v" + std::to_string(i));

    auto diff = [&](SymbolId a, SymbolId b, const char* why) {
        ctx.assumptions.push_back({sub(poly_symbol(a), poly_symbol(b)), why});
    };
    auto positive = [&](SymbolId m) {
        ctx.assumptions.push_back({poly_symbol(m), "multiplicity is a positive integer"});
    };
    switch (pr.tag) {
    case CaseTag::FourA:
    case CaseTag::FourB:
        diff(s.lam_u, s.lam1, "distinct principal curvatures");
        diff(s.lam_v, s.lam1, "distinct principal curvatures");
        diff(s.lam_w, s.lam1, "distinct principal curvatures");
        diff(s.lam_u, s.lam_v, "distinct principal curvatures");
        diff(s.lam_u, s.lam_w, "distinct principal curvatures");
        diff(s.lam_v, s.lam_w, "distinct principal curvatures");
        positive(s.p);
        positive(s.q);
        positive(s.r);
        break;
    case CaseTag::Three:
        diff(s.lam_u, s.lam1, "distinct principal curvatures");
        diff(s.lam_v, s.lam1, "distinct principal curvatures");
        diff(s.lam_u, s.lam_v, "distinct principal curvatures");
        positive(s.p);
        ctx.assumptions.push_back(
            {sub(sub(poly_symbol(s.n), poly_symbol(s.p)), poly_const(1)),
             "second multiplicity n-p-1 is a positive integer"});
        break;
    case CaseTag::Two:
        diff(s.lam, s.lam1, "distinct principal curvatures");
        ctx.assumptions.push_back(
            {sub(poly_symbol(s.n), poly_const(1)), "multiplicity n-1 is a positive integer"});
        break;
    }
    return ctx;
}

MultiPoly ScenarioContext::param(SymbolId id) const {
    const ScenarioProfile& pr = profile;
    if (id == s.p && pr.p > 0)
        return poly_const(pr.p);
    if (id == s.q && pr.q > 0)
        return poly_const(pr.q);
    if (id == s.r && pr.r > 0)
        return poly_const(pr.r);
    if (id == s.n) {
        if (pr.tag == CaseTag::FourA || pr.tag == CaseTag::FourB) {
            // n = p + q + r + 1 in the four-curvature cases
            MultiPoly e = poly_const(1);
            e = add(e, param(s.p));
            e = add(e, param(s.q));
            e = add(e, param(s.r));
            return e;
        }
        if (pr.n > 0)
            return poly_const(pr.n);
    }
    if (id == s.c && pr.curvature)
        return poly_const(*pr.curvature);
    if (id == s.beta && pr.norm)
        return poly_const(*pr.norm);
    return poly_symbol(id);
}

MultiPoly ScenarioContext::instantiate(const MultiPoly& e) const {
    MultiPoly out = e;
    for (SymbolId id : {s.n, s.p, s.q, s.r, s.c, s.beta}) {
        if (!contains_symbol(out, id))
            continue;
        MultiPoly val = param(id);
        if (val.is_constant() || !(val == poly_symbol(id)))
            out = substitute(out, id, val);
    }
    return out;
}

RationalExpr ScenarioContext::instantiate(const RationalExpr& e) const {
    RationalExpr out;
    out = rat_of(instantiate(e.num));
    for (const auto& [f, k] : e.den) {
        MultiPoly fi = instantiate(f);
        if (fi.is_zero())
            throw step_failure("instantiated denominator vanished");
        for (unsigned i = 0; i < k; ++i)
            out = rat_div(out, fi);
    }
    return out;
}

ConstraintSet build_constraints(const ScenarioContext& ctx) {
    const Symbols& s = ctx.s;
    auto sym = [&](SymbolId id) { return poly_symbol(id); };
    MultiPoly P = ctx.param(s.p), Qm = ctx.param(s.q), R = ctx.param(s.r);
    MultiPoly N = ctx.param(s.n), Bt = ctx.param(s.beta);
    ConstraintSet cs;
    switch (ctx.profile.tag) {
    case CaseTag::FourA:
    case CaseTag::FourB: {
        cs.trace = add(mul(P, sym(s.lam_u)), mul(Qm, sym(s.lam_v)));
        cs.trace = add(cs.trace, mul(R, sym(s.lam_w)));
        cs.trace = add(cs.trace, scale(sym(s.lam1), 3));
        cs.norm = mul(sym(s.lam1), sym(s.lam1));
        cs.norm = add(cs.norm, mul(P, mul(sym(s.lam_u), sym(s.lam_u))));
        cs.norm = add(cs.norm, mul(Qm, mul(sym(s.lam_v), sym(s.lam_v))));
        cs.norm = add(cs.norm, mul(R, mul(sym(s.lam_w), sym(s.lam_w))));
        cs.norm = sub(cs.norm, Bt);
        break;
    }
    case CaseTag::Three: {
        MultiPoly M2 = sub(sub(N, P), poly_const(1)); // n - p - 1
        cs.trace = add(mul(P, sym(s.lam_u)), mul(M2, sym(s.lam_v)));
        cs.trace = add(cs.trace, scale(sym(s.lam1), 3));
        cs.norm = mul(sym(s.lam1), sym(s.lam1));
        cs.norm = add(cs.norm, mul(P, mul(sym(s.lam_u), sym(s.lam_u))));
        cs.norm = add(cs.norm, mul(M2, mul(sym(s.lam_v), sym(s.lam_v))));
        cs.norm = sub(cs.norm, Bt);
        break;
    }
    case CaseTag::Two: {
        MultiPoly M = sub(N, poly_const(1)); // n - 1
        cs.trace = add(mul(M, sym(s.lam)), scale(sym(s.lam1), 3));
        cs.norm = add(mul(sym(s.lam1), sym(s.lam1)), mul(M, mul(sym(s.lam), sym(s.lam))));
        cs.norm = sub(cs.norm, Bt);
        break;
    }
    }
    return cs;
}

MultiPoly eliminate_by_trace(const MultiPoly& e, SymbolId target, const ConstraintSet& cs) {
    if (degree_in(cs.trace, target) != 1)
        throw not_linear_in_target("trace constraint is not linear in the target");
    return eliminate_linear(e, cs.trace, target);
}

Q scalar_curvature(long n, const Q& c, const Q& H, const Q& beta) {
    return Q(n) * Q(n - 1) * c + Q(n) * Q(n) * H * H + beta;
}

MultiPoly scalar_curvature_symbolic(ScenarioContext& ctx) {
    const Symbols& s = ctx.s;
    MultiPoly N = poly_symbol(s.n);
    MultiPoly e = mul(N, mul(sub(N, poly_const(1)), poly_symbol(s.c)));
    e = add(e, mul(mul(N, N), mul(poly_symbol(s.H), poly_symbol(s.H))));
    e = add(e, poly_symbol(s.beta));
    return e;
}

namespace {

// e1(w_ii1) = w_ii1^2 + c + lam1*lam_i
MultiPoly slope_rule(const ScenarioContext& ctx, SymbolId w, SymbolId lam_i) {
    MultiPoly e = mul(poly_symbol(w), poly_symbol(w));
    e = add(e, ctx.param(ctx.s.c));
    e = add(e, mul(poly_symbol(ctx.s.lam1), poly_symbol(lam_i)));
    return e;
}

} // namespace

std::map<std::string, Derivation> standard_derivations(const ScenarioContext& ctx) {
    const Symbols& s = ctx.s;
    auto sym = [&](SymbolId id) { return poly_symbol(id); };
    std::map<std::string, Derivation> out;

    auto constants_to_zero = [&](Derivation& d) {
        for (SymbolId id : {s.beta, s.c, s.p, s.q, s.r, s.n})
            d.set_zero(id);
    };

    switch (ctx.profile.tag) {
    case CaseTag::FourA: {
        Derivation e1;
        e1.name = "e1";
        e1.set(s.lam1, sym(s.e1_lam1));
        e1.set(s.lam_u, mul(sub(sym(s.lam_u), sym(s.lam1)), sym(s.w_uu1)));
        e1.set(s.lam_v, mul(sub(sym(s.lam_v), sym(s.lam1)), sym(s.w_vv1)));
        e1.set(s.lam_w, mul(sub(sym(s.lam_w), sym(s.lam1)), sym(s.w_ww1)));
        e1.set(s.w_uu1, slope_rule(ctx, s.w_uu1, s.lam_u));
        e1.set(s.w_vv1, slope_rule(ctx, s.w_vv1, s.lam_v));
        e1.set(s.w_ww1, slope_rule(ctx, s.w_ww1, s.lam_w));
        e1.set(s.w_vv_u, mul(sym(s.w_vv_u), sym(s.w_vv1)));
        e1.set(s.w_ww_u, mul(sym(s.w_ww_u), sym(s.w_ww1)));
        e1.set(s.e1_lam1, sym(s.e1e1_lam1));
        constants_to_zero(e1);
        out.emplace("e1", std::move(e1));

        Derivation eu;
        eu.name = "eu";
        eu.set_zero(s.lam1);
        eu.set(s.lam_u, sym(s.eu_lam_u));
        eu.set(s.lam_v, mul(sub(sym(s.lam_v), sym(s.lam_u)), sym(s.w_vv_u)));
        eu.set(s.lam_w, mul(sub(sym(s.lam_w), sym(s.lam_u)), sym(s.w_ww_u)));
        eu.set(s.w_uu1, sym(s.eu_w_uu1));
        eu.set(s.w_vv1, mul(sym(s.w_vv_u), sub(sym(s.w_vv1), sym(s.w_uu1))));
        eu.set(s.w_ww1, mul(sym(s.w_ww_u), sub(sym(s.w_ww1), sym(s.w_uu1))));
        eu.set(s.a1, sym(s.eu_a1));
        eu.set_zero(s.e1_lam1);
        constants_to_zero(eu);
        out.emplace("eu", std::move(eu));
        break;
    }
    case CaseTag::FourB: {
        auto slope = [&](SymbolId lam_i) {
            return add(mul(sym(s.alpha), sym(lam_i)), sym(s.phi));
        };
        Derivation e1;
        e1.name = "e1";
        e1.set(s.lam1, sym(s.e1_lam1));
        e1.set(s.lam_u, mul(sub(sym(s.lam_u), sym(s.lam1)), slope(s.lam_u)));
        e1.set(s.lam_v, mul(sub(sym(s.lam_v), sym(s.lam1)), slope(s.lam_v)));
        e1.set(s.lam_w, mul(sub(sym(s.lam_w), sym(s.lam1)), slope(s.lam_w)));
        MultiPoly one_a2 = add(poly_const(1), mul(sym(s.alpha), sym(s.alpha)));
        e1.set(s.alpha, add(mul(sym(s.alpha), sym(s.phi)), mul(sym(s.lam1), one_a2)));
        MultiPoly ephi = mul(sym(s.phi), sym(s.phi));
        ephi = add(ephi, mul(sym(s.alpha), mul(sym(s.lam1), sym(s.phi))));
        ephi = add(ephi, ctx.param(s.c));
        e1.set(s.phi, ephi);
        e1.set(s.e1_lam1, sym(s.e1e1_lam1));
        constants_to_zero(e1);

        Derivation e1c = e1;
        e1c.name = "e1_closed";
        // 3 e1(lam1) = (n+2) lam1 phi - alpha (beta + 2 lam1^2)
        MultiPoly three_d = mul(add(ctx.param(s.n), poly_const(2)),
                                mul(sym(s.lam1), sym(s.phi)));
        MultiPoly blam = add(ctx.param(s.beta), scale(mul(sym(s.lam1), sym(s.lam1)), 2));
        three_d = sub(three_d, mul(sym(s.alpha), blam));
        e1c.set(s.lam1, rat_quotient(three_d, poly_const(3)));

        out.emplace("e1", std::move(e1));
        out.emplace("e1_closed", std::move(e1c));
        break;
    }
    case CaseTag::Three: {
        MultiPoly P = ctx.param(s.p), N = ctx.param(s.n);
        MultiPoly m2 = sub(sub(N, P), poly_const(1)); // n - p - 1
        // D_mu = p (3 lam1 + (n-1) lam_u), the shared denominator
        MultiPoly Dmu = mul(P, add(scale(sym(s.lam1), 3), mul(sub(N, poly_const(1)), sym(s.lam_u))));

        Derivation e1;
        e1.name = "e1";
        e1.set(s.lam1, sym(s.e1_lam1));
        e1.set(s.lam_u, mul(sym(s.mu), sym(s.e1_lam1)));
        // (n-p-1) e1(lam_v) = -(3 + p mu) e1(lam1)  [from the trace relation]
        MultiPoly numv = neg(mul(add(poly_const(3), mul(P, sym(s.mu))), sym(s.e1_lam1)));
        e1.set(s.lam_v, rat_quotient(numv, m2));
        // e1(mu) = -((8+n-p) + 6 p mu + (n-1) p mu^2) e1(lam1) / D_mu
        MultiPoly emu = add(sub(add(poly_const(8), N), P),
                            scale(mul(P, sym(s.mu)), 6));
        emu = add(emu, mul(mul(sub(N, poly_const(1)), P), mul(sym(s.mu), sym(s.mu))));
        e1.set(s.mu, rat_quotient(neg(mul(emu, sym(s.e1_lam1))), Dmu));
        e1.set(s.e1_lam1, sym(s.e1e1_lam1));
        constants_to_zero(e1);
        out.emplace("e1", std::move(e1));

        Derivation ej;
        ej.name = "ej";
        ej.set_zero(s.lam1);
        ej.set(s.lam_u, sym(s.ej_lam_u));
        constants_to_zero(ej);
        out.emplace("ej", std::move(ej));

        Derivation ei;
        ei.name = "ei";
        ei.set_zero(s.lam1);
        ei.set(s.lam_v, sym(s.ei_lam_v));
        constants_to_zero(ei);
        out.emplace("ei", std::move(ei));
        break;
    }
    case CaseTag::Two:
        break;
    }
    if (out.empty() && ctx.profile.tag != CaseTag::Two)
        throw unknown_profile("no derivation rules for profile");
    return out;
}

} // namespace cmc
