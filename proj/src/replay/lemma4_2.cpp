#include "cmc/elimination.hpp"
#include "cmc/replay.hpp"

// Four distinct principal curvatures. Part (a): when the slope combination
// a1 is nonzero, the mixed connection components among the non-radial
// curvature directions all vanish. Part (b): when a1 vanishes, the three
// radial slopes lie on a common affine line alpha*lam + phi, and the pair
// (alpha, phi) satisfies two Riccati-type radial evolution equations.

namespace cmc::pipelines {

void lemma4_2a(PipelineRun& R) {
    ScenarioContext& ctx = R.ctx;
    const Symbols& s = ctx.s;
    auto P = [](SymbolId id) { return poly_symbol(id); };
    auto D = [&](SymbolId a, SymbolId b) { return sub(P(a), P(b)); };
    const std::string dist = "distinct principal curvatures";

    R.premise("e:d45", "mixed curvature evaluation relating w_vu_w and w_uv_w to the slopes");

    // compatibility instance tying the same two components through curvatures
    MultiPoly cand46 = sub(mul(D(s.lam_u, s.lam_w), P(s.w_vu_w)),
                           mul(D(s.lam_v, s.lam_w), P(s.w_uv_w)));
    R.match("MatchFixture", "e:d46", cand46, false, "d46");

    MultiPoly dd = dependency_determinant(R.fxp("e:d45"), R.fxp("e:d46"), s.w_vu_w, s.w_uv_w);
    R.match("DependencyDet", "a1", dd, false, "mixed-pair-determinant");
    R.side(P(s.a1), "hypothesis of this part");
    R.note("the pair (w_vu_w, w_uv_w) solves a homogeneous linear system whose determinant "
           "is a unit multiple of a1, so both components vanish");

    // antisymmetry in the last two indices transfers the vanishing
    MultiPoly c5a = substitute(add(P(s.w_vu_w), P(s.w_vw_u)), s.w_vu_w, poly_zero());
    R.assert_zero("w_vw_u-vanishes", sub(c5a, P(s.w_vw_u)),
                  "antisymmetry pairs w_vw_u with the vanishing w_vu_w");
    MultiPoly c5b = substitute(add(P(s.w_uv_w), P(s.w_uw_v)), s.w_uv_w, poly_zero());
    R.assert_zero("w_uw_v-vanishes", sub(c5b, P(s.w_uw_v)),
                  "antisymmetry pairs w_uw_v with the vanishing w_uv_w");

    // compatibility instances transfer the vanishing to the remaining pair
    MultiPoly inst3 = sub(mul(D(s.lam_v, s.lam_u), P(s.w_wv_u)),
                          mul(D(s.lam_w, s.lam_u), P(s.w_vw_u)));
    inst3 = substitute(inst3, s.w_vw_u, poly_zero());
    inst3 = R.strip(inst3, {{D(s.lam_v, s.lam_u), dist}});
    R.assert_zero("w_wv_u-vanishes", sub(inst3, P(s.w_wv_u)),
                  "compatibility instance reduces to w_wv_u once w_vw_u = 0");

    MultiPoly inst4 = sub(mul(D(s.lam_u, s.lam_v), P(s.w_wu_v)),
                          mul(D(s.lam_w, s.lam_v), P(s.w_uw_v)));
    inst4 = substitute(inst4, s.w_uw_v, poly_zero());
    inst4 = R.strip(inst4, {{D(s.lam_u, s.lam_v), dist}});
    R.assert_zero("w_wu_v-vanishes", sub(inst4, P(s.w_wu_v)),
                  "compatibility instance reduces to w_wu_v once w_uw_v = 0");

    R.finish_verified("all six mixed connection components among the non-radial curvature "
                      "directions vanish when a1 is nonzero");
}

void lemma4_2b(PipelineRun& R) {
    ScenarioContext& ctx = R.ctx;
    const Symbols& s = ctx.s;
    auto P = [](SymbolId id) { return poly_symbol(id); };
    auto D = [&](SymbolId a, SymbolId b) { return sub(P(a), P(b)); };
    const Derivation& e1 = R.deriv.at("e1");

    R.note("branch premise: a1 = 0");
    // the three stated reformulations are unit multiples of a1
    R.match("MatchFixture", "e:d47a", R.fxp("a1"), false, "d47a");
    R.match("MatchFixture", "e:d47b", R.fxp("a1"), false, "d47b");
    R.match("MatchFixture", "e:d47c", R.fxp("a1"), false, "d47c");
    R.note("each reformulation vanishes exactly when a1 does");

    // slopes lie on a line: alpha and phi solved from the first two slopes
    RationalExpr alpha_def = rat_quotient(D(s.w_uu1, s.w_vv1), D(s.lam_u, s.lam_v));
    RationalExpr phi_def = rat_quotient(
        sub(mul(P(s.lam_u), P(s.w_vv1)), mul(P(s.lam_v), P(s.w_uu1))), D(s.lam_u, s.lam_v));
    R.side(D(s.lam_u, s.lam_v), "distinct principal curvatures");

    std::map<SymbolId, RationalExpr> line{{s.alpha, alpha_def}, {s.phi, phi_def}};
    R.relation("e:d48u", line, "d48u");
    R.relation("e:d48v", line, "d48v");
    {
        RationalExpr res = eval_rational(R.fxp("e:d48w"), line);
        R.match("MatchFixture", "a1", rat_reduce(res).num, false, "d48w-residual");
        R.note("the third slope lies on the same line exactly when a1 = 0");
    }

    // radial evolution of alpha and phi
    std::map<SymbolId, RationalExpr> ra{
        {s.e1_alpha, e1.apply(alpha_def)}, {s.alpha, alpha_def}, {s.phi, phi_def}};
    R.relation("e:d49a", ra, "d49a");
    std::map<SymbolId, RationalExpr> rp{
        {s.e1_phi, e1.apply(phi_def)}, {s.alpha, alpha_def}, {s.phi, phi_def}};
    R.relation("e:d49b", rp, "d49b");

    R.finish_verified("with a1 = 0 the radial slopes are affine in the curvature and the "
                      "line coefficients satisfy the stated evolution equations");
}

} // namespace cmc::pipelines
