#include "cmc/elimination.hpp"
#include "cmc/replay.hpp"

#include <string>

// Three distinct principal curvatures with multiplicities (1, p, n-p-1).
// The two non-radial blocks are rigid (their curvature is constant along
// block directions), so everything reduces to ODEs along the radial
// direction in lam1, lam_u and the derivative ratio mu. Two Riccati-type
// slope evolutions and one curvature evaluation close into polynomial
// relations; eliminating mu and lam_u leaves a nonzero polynomial in lam1.
//
// The reference display forms d74-d78 are printed at curvature zero, and
// d76-d78 additionally at (n,p) = (4,2) with lam for the block curvature.
// The replay keeps everything general and compares against the printed
// forms at exactly that specialization, reporting the dropped terms rather
// than absorbing them.

namespace cmc::pipelines {

void case2(PipelineRun& R) {
    ScenarioContext& ctx = R.ctx;
    const Symbols& s = ctx.s;
    auto P = [](SymbolId id) { return poly_symbol(id); };
    auto D = [&](SymbolId a, SymbolId b) { return sub(P(a), P(b)); };
    const std::string dist = "distinct principal curvatures";
    const SymbolId sE = s.e1_lam1;

    MultiPoly m2 = sub(sub(ctx.param(s.n), ctx.param(s.p)), poly_const(1));
    MultiPoly Dmu = mul(ctx.param(s.p),
                        add(scale(P(s.lam1), 3), mul(sub(ctx.param(s.n), poly_const(1)), P(s.lam_u))));

    R.match("MatchFixture", "e:d63", R.cs.trace, false, "d63");
    R.match("MatchFixture", "e:d64", R.cs.norm, false, "d64");
    MultiPoly e65 = eliminate_by_trace(R.cs.norm, s.lam_v, R.cs);
    R.match("EliminateTrace", "e:d65", e65, false, "d65");
    MultiPoly e66 = eliminate_by_trace(R.cs.norm, s.lam_u, R.cs);
    R.match("EliminateTrace", "e:d66", e66, false, "d66");

    R.side(P(sE), "branch hypothesis: the mean curvature is nonconstant along the "
                  "radial direction");
    R.premise("e:d70a", "definition of mu as the ratio of the two radial derivatives");

    // differentiating the lam_v-free constraint forces the mu relation
    {
        Derivation dfree;
        dfree.name = "e1-ratio-free";
        dfree.set(s.lam1, P(sE));
        dfree.set(s.lam_u, P(s.e1_lam_u));
        for (SymbolId id : {s.beta, s.c, s.p, s.q, s.r, s.n}) dfree.set_zero(id);
        R.combination("mu", dfree.apply_poly(R.fxp("e:d65")),
                      {{scale(P(sE), 2), R.fxp("mu")}, {scale(Dmu, 2), R.fxp("e:d70a")}},
                      {"mu", "e:d70a", "e:d65"});
    }

    // radial derivative with mu kept opaque
    Derivation dabs;
    dabs.name = "e1-mu-opaque";
    dabs.set(s.lam1, P(sE));
    dabs.set(s.lam_u, mul(P(s.mu), P(sE)));
    dabs.set(s.lam_v,
             rat_quotient(neg(mul(add(poly_const(3), mul(ctx.param(s.p), P(s.mu))), P(sE))), m2));
    dabs.set(s.mu, P(s.e1_mu));
    dabs.set(sE, P(s.e1e1_lam1));
    for (SymbolId id : {s.beta, s.c, s.p, s.q, s.r, s.n}) dabs.set_zero(id);

    R.match("Differentiate", "e:d70b", dabs.apply_poly(R.fxp("mu")), false, "d70b");

    // block directions do not move the block curvatures ...
    {
        MultiPoly cand = R.deriv.at("ej").apply_poly(R.fxp("e:d65"));
        cand = R.strip(cand, {{ctx.param(s.p), "multiplicity is a positive integer"},
                              {add(scale(P(s.lam1), 3),
                                   mul(sub(ctx.param(s.n), poly_const(1)), P(s.lam_u))),
                               "slope denominator is nonzero at a generic point"}});
        R.match("Differentiate", "e:d67a", cand, false, "d67a");
    }
    {
        // compatibility instance e_j(lam_u) = (lam_u - lam_v) w_uu_j
        MultiPoly rel = sub(P(s.ej_lam_u), mul(D(s.lam_u, s.lam_v), P(s.w_uu_j)));
        MultiPoly cand = R.strip(substitute(rel, s.ej_lam_u, poly_zero()),
                                 {{D(s.lam_u, s.lam_v), dist}});
        R.match("MatchFixture", "e:d67b", cand, false, "d67b");
    }
    {
        MultiPoly cand = R.deriv.at("ei").apply_poly(R.fxp("e:d66"));
        cand = R.strip(cand, {{m2, "multiplicity is a positive integer"},
                              {add(scale(P(s.lam1), 3),
                                   mul(sub(ctx.param(s.n), poly_const(1)), P(s.lam_v))),
                               "slope denominator is nonzero at a generic point"}});
        R.match("Differentiate", "e:d68a", cand, false, "d68a");
    }
    {
        MultiPoly rel = sub(P(s.ei_lam_v), mul(D(s.lam_v, s.lam_u), P(s.w_vv_i)));
        MultiPoly cand = R.strip(substitute(rel, s.ei_lam_v, poly_zero()),
                                 {{D(s.lam_v, s.lam_u), dist}});
        R.match("MatchFixture", "e:d68b", cand, false, "d68b");
    }

    // ... and the in-block mixed components vanish: the compatibility
    // instance degenerates when two directions share a curvature, and
    // antisymmetry transfers the vanishing
    {
        MultiPoly inst = neg(mul(D(s.lam_v, s.lam_u), P(s.w_ij_k)));
        MultiPoly cand = R.strip(inst, {{D(s.lam_v, s.lam_u), dist}});
        R.match("MatchFixture", "e:d69b", cand, false, "d69b");
        cand = substitute(add(P(s.w_ik_j), P(s.w_ij_k)), s.w_ij_k, poly_zero());
        R.match("MatchFixture", "e:d69a", cand, false, "d69a");
        R.premise("e:d69c", "frame normalization within the equal-curvature block");
        cand = substitute(add(P(s.w_jk_i), P(s.w_ji_k)), s.w_ji_k, poly_zero());
        R.match("MatchFixture", "e:d69d", cand, false, "d69d");
    }

    R.premise("e:d71", "curvature evaluation across the two blocks; the mixed products vanish");

    // slopes in terms of mu and the radial derivative
    R.side(D(s.lam_u, s.lam1), dist);
    R.side(D(s.lam_v, s.lam1), dist);
    RationalExpr Wu = rat_quotient(mul(P(s.mu), P(sE)), D(s.lam_u, s.lam1));
    RationalExpr Wv = rat_quotient(neg(mul(add(poly_const(3), mul(ctx.param(s.p), P(s.mu))), P(sE))),
                                   mul(m2, D(s.lam_v, s.lam1)));

    // Riccati-type radial evolution of the two block slopes, cleared
    auto riccati = [&](const RationalExpr& W, SymbolId lam_i) {
        RationalExpr rhs = rat_add(rat_mul(W, W),
                                   rat_of(add(mul(P(s.lam1), P(lam_i)), ctx.param(s.c))));
        return normalize(rat_numerator(rat_reduce(rat_sub(dabs.apply(W), rhs))));
    };
    R.match("Differentiate", "e:d72", riccati(Wu, s.lam_u), false, "d72");
    R.match("Differentiate", "e:d73", riccati(Wv, s.lam_v), false, "d73");

    // the curvature evaluation, cleared and with lam_v eliminated
    MultiPoly gen74;
    {
        RationalExpr ev = eval_rational(R.fxp("e:d71"), {{s.w_uu1, Wu}, {s.w_vv1, Wv}});
        gen74 = eliminate_by_trace(rat_numerator(rat_reduce(ev)), s.lam_v, R.cs);
        MultiPoly cmp = contains_symbol(gen74, s.c) ? substitute(gen74, s.c, Q(0)) : gen74;
        MatchResult m = match_polys(cmp, R.fxp("e:d74"));
        R.step("MatchFixture", "d74", m.ok(),
               match_text(m, ctx.table) + "; compared at curvature zero", {"e:d74"});
        R.note("the printed form of the curvature evaluation omits the ambient "
               "curvature terms; the replay keeps them");
    }

    R.side(Dmu, "slope denominator divided out of the mu derivative");

    // substitute the mu derivative into the first Riccati relation
    MultiPoly gen75 = rat_numerator(
        rat_reduce(eval_rational(R.fxp("e:d72"), {{s.e1_mu, R.deriv.at("e1").rules.at(s.mu)}})));
    {
        RationalExpr Asol = R.solve_defining("A", s.A);
        MultiPoly ref = rat_numerator(rat_reduce(eval_rational(R.fxp("e:d75"), {{s.A, Asol}})));
        MultiPoly cmp = contains_symbol(gen75, s.c) ? substitute(gen75, s.c, Q(0)) : gen75;
        MatchResult m = match_polys(cmp, ref);
        R.step("MatchFixture", "d75", m.ok(),
               match_text(m, ctx.table) + "; compared at curvature zero", {"e:d75", "A"});
        R.note("the printed form drops the term -c * p * (3*lam1 + (n-1)*lam_u) * "
               "(lam_u - lam1)^2 next to the letter A");
    }

    // same substitution in the second Riccati relation
    MultiPoly gen76 = rat_numerator(
        rat_reduce(eval_rational(R.fxp("e:d73"), {{s.e1_mu, R.deriv.at("e1").rules.at(s.mu)}})));
    gen76 = eliminate_by_trace(gen76, s.lam_v, R.cs);

    // display comparisons run at the printed specialization only
    bool disp = ctx.profile.p == 2 && ctx.profile.n == 0 && !ctx.profile.curvature;
    auto display_spec = [&](MultiPoly e) {
        e = substitute(e, s.n, Q(4));
        e = substitute(e, s.c, Q(0));
        return substitute(e, s.lam_u, P(s.lam));
    };
    auto display_step = [&](const std::string& name, const MultiPoly& cand, const MultiPoly& ref,
                            std::vector<std::string> fxids) {
        MatchResult m = match_polys(cand, ref);
        bool ok = m.ok() || m.cofactor.has_value();
        R.step("MatchFixture", name, ok,
               match_text(m, ctx.table) + "; compared at (n,p) = (4,2), curvature zero",
               std::move(fxids));
    };

    if (disp) {
        RationalExpr Bsol = R.solve_defining("B", s.B);
        MultiPoly ref = rat_numerator(rat_reduce(eval_rational(R.fxp("e:d76"), {{s.B, Bsol}})));
        display_step("d76", display_spec(gen76), ref, {"e:d76", "B"});
    } else {
        R.note("d76-d78 are printed at (n,p) = (4,2); this profile replays the general "
               "forms without the display comparison");
    }

    // cross-eliminate the second radial derivative, then the squared first
    // derivative, against the curvature evaluation
    MultiPoly a75 = coeff_in(gen75, s.e1e1_lam1, 1);
    MultiPoly a76 = coeff_in(gen76, s.e1e1_lam1, 1);
    MultiPoly cand77 = sub(mul(a76, gen75), mul(a75, gen76));
    R.step("DependencyDet", "d77-cross", !cand77.is_zero() &&
               degree_in(cand77, s.e1e1_lam1) < 1,
           "second radial derivative eliminated between the two Riccati relations");

    MultiPoly cand78;
    {
        MultiPoly a74 = coeff_in(gen74, sE, 2);
        MultiPoly r74 = coeff_in(gen74, sE, 0);
        MultiPoly al = coeff_in(cand77, sE, 2);
        MultiPoly ga = coeff_in(cand77, sE, 0);
        cand78 = sub(mul(a74, ga), mul(al, r74));
        R.step("DependencyDet", "d78-cross", !cand78.is_zero() && degree_in(cand78, sE) < 1,
               "squared radial derivative eliminated against the curvature evaluation");
    }

    if (disp) {
        auto rspec = [&](const RationalExpr& e) {
            return rat_quotient(display_spec(rat_numerator(e)), display_spec(rat_denominator(e)));
        };
        RationalExpr Aspec = rspec(R.solve_defining("A", s.A));
        RationalExpr Bsol = R.solve_defining("B", s.B);
        RationalExpr Dsol = R.solve_defining("D", s.D);
        MultiPoly cexpr = rat_as_poly(R.solve_defining("C", s.C));
        RationalExpr Cfull = eval_rational(cexpr, {{s.A, Aspec}, {s.B, Bsol}});
        std::map<SymbolId, RationalExpr> cd{{s.C, Cfull}, {s.D, Dsol}};
        MultiPoly ref77 = rat_numerator(rat_reduce(eval_rational(R.fxp("e:d77"), cd)));
        display_step("d77", display_spec(cand77), ref77, {"e:d77", "C", "D"});
        MultiPoly ref78 = rat_numerator(rat_reduce(eval_rational(R.fxp("e:d78"), cd)));
        display_step("d78", display_spec(cand78), ref78, {"e:d78"});
    }

    // eliminate mu through its defining relation, then lam_u
    MultiPoly p78 = normalize(eliminate_linear(cand78, R.fxp("mu"), s.mu));
    R.step("EliminateTrace", "mu-elimination", !p78.is_zero(),
           std::to_string(p78.t.size()) + " terms in lam1, lam_u");
    MultiPoly phi = normalize(resultant(R.fxp("e:d65"), p78, s.lam_u));
    R.step("Resultant", "final-eliminant", !phi.is_zero(),
           std::to_string(phi.t.size()) + " terms, degree " +
               std::to_string(degree_in(phi, s.lam1)) + " in lam1");
    R.note("with lam1 = -n*H/2 the eliminant is the stated obstruction to a "
           "nonconstant mean curvature");
    R.finish_nonvanishing(phi, s.lam1);
}

} // namespace cmc::pipelines
