#pragma once

#include "cmc/determinant.hpp"
#include "cmc/rational_expr.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace cmc {

// Randomized exact-rational checks. A nonzero value at a sampled point is a
// proof of nonvanishing; a run of zero values proves nothing and is reported
// as such.

struct SamplePlan {
    std::uint64_t seed = 1;
    long bound = 20; // numerators from [-bound, bound], denominators from [1, bound]
    int trials = 16;
};

// splitmix64: tiny, deterministic, identical on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    long uniform(long lo, long hi); // inclusive on both ends
private:
    std::uint64_t state_;
};

Q sample_q(SplitMix64& rng, long bound);

struct PointWitness {
    std::map<SymbolId, Q> point;
    Q value;
    int trial = 0;
};

struct ZeroTestResult {
    bool proved_nonzero = false;
    std::optional<PointWitness> witness;
};

// Samples every symbol in the support of e (and of the avoid list); points at
// which some avoid entry vanishes are rejected and redrawn. proved_nonzero is
// set on the first nonzero evaluation. Exhausting the plan is consistent with
// e == 0 but is never evidence of it.
ZeroTestResult zero_test(const MultiPoly& e, const SamplePlan& plan,
                         const std::vector<MultiPoly>& avoid = {});
ZeroTestResult zero_test(const RationalExpr& e, const SamplePlan& plan,
                         const std::vector<MultiPoly>& avoid = {});

// f and g viewed as univariate in x with rational coefficients (throws
// cas_error if a coefficient involves another symbol). True iff they share a
// factor of positive degree, by the Euclidean remainder sequence.
bool gcd_oracle(const MultiPoly& f, const MultiPoly& g, SymbolId x);

// One stage of an elimination tower: the pair (f, g) loses `eliminated`.
// When f_is_prev is set the stage reuses the previous stage's resultant as f
// and only g is taken from the stage.
struct ChainStage {
    MultiPoly f;
    MultiPoly g;
    SymbolId eliminated = -1;
    bool f_is_prev = false;
};

// Replays the tower on randomly specialized inputs: every symbol except the
// survivor and the eliminated variables is evaluated at a sampled rational,
// each stage's resultant is recomputed on the specialized pair, and the final
// univariate-in-survivor polynomial is evaluated at a sampled survivor value.
// A sample is discarded when a leading coefficient vanishes (the Sylvester
// matrix would change shape) or an avoid entry vanishes. A nonzero final
// value is returned as a witness that the symbolic eliminant is not
// identically zero. Throws identically_zero when a tower input is the zero
// polynomial and exhausted_trials when no witness is found.
PointWitness specialization_witness(const std::vector<ChainStage>& tower,
                                    SymbolId survivor, const SamplePlan& plan,
                                    const std::vector<MultiPoly>& avoid,
                                    const SymbolTable& table);

} // namespace cmc
