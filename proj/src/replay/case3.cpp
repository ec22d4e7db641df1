#include "cmc/elimination.hpp"
#include "cmc/replay.hpp"

#include <string>

// Two distinct principal curvatures with multiplicities (3, n-1). The two
// scalar constraints are already a plane curve in (lam1, lam); eliminating
// lam leaves a single nonzero polynomial in lam1, so lam1 is locally
// constant and the scalar curvature follows.

namespace cmc::pipelines {

void case3(PipelineRun& R) {
    ScenarioContext& ctx = R.ctx;
    const Symbols& s = ctx.s;

    R.match("MatchFixture", "e:d80", R.cs.trace, false, "d80");
    R.match("MatchFixture", "e:d81", R.cs.norm, false, "d81");

    R.side(sub(ctx.param(s.n), poly_const(1)), "the multiplicity n-1 is positive");
    MultiPoly final_rel = normalize(eliminate_linear(R.fxp("e:d81"), R.fxp("e:d80"), s.lam));
    R.step("EliminateTrace", "lam-elimination", !final_rel.is_zero(), ctx.text(final_rel));

    R.match("MatchFixture", "e:d82", scalar_curvature_symbolic(ctx), false, "d82");

    R.finish_nonvanishing(final_rel, s.lam1);
}

} // namespace cmc::pipelines
