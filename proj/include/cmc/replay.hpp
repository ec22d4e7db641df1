#pragma once

#include "cmc/fixtures.hpp"
#include "cmc/oracle.hpp"
#include "cmc/report.hpp"
#include "cmc/scenario.hpp"

#include <chrono>
#include <set>

namespace cmc {

struct RunOptions {
    std::uint64_t seed = 1;
    // residual checks (does a reconstructed quantity vanish at random points)
    long residual_bound = 20;
    int residual_trials = 16;
    // nonvanishing witnesses for terminal eliminants
    long witness_bound = 50;
    int witness_trials = 64;
    std::size_t max_terms = 5000000;
    long budget_secs = 0;      // 0 = unlimited
    std::string fixtures_path; // empty = compiled-in default
};

std::vector<std::string> pipeline_names();

// Dispatches to the named pipeline. Throws unknown_profile when the profile
// does not fit the pipeline (wrong case tag, mixed symbolic/concrete
// multiplicities) and unknown_fixture for an unloadable reference set; any
// in-run failure is reported through the verdict instead.
VerificationReport run_pipeline(const std::string& name, const ScenarioProfile& profile,
                                const RunOptions& opt);

// Exact ideal-membership check: target == sum of multiplier * premise.
bool check_combination(const MultiPoly& target,
                       const std::vector<std::pair<MultiPoly, MultiPoly>>& parts);

// Substitute rational expressions for symbols, term by term.
RationalExpr eval_rational(const MultiPoly& p, const std::map<SymbolId, RationalExpr>& sub);

// Shared state threaded through one pipeline run: the scenario, the loaded
// fixtures, the accumulating report, and small step helpers so the pipeline
// bodies read like the derivations they replay.
class PipelineRun {
public:
    PipelineRun(const std::string& pipeline, const ScenarioProfile& profile,
                const RunOptions& opt);

    ScenarioContext ctx;
    ConstraintSet cs;
    FixtureSet fx;
    std::map<std::string, Derivation> deriv;
    RunOptions opt;
    VerificationReport rep;

    static MultiPoly P(SymbolId id) { return poly_symbol(id); }

    MultiPoly fxp(const std::string& id); // stored form, profile-instantiated
    MultiPoly fxe(const std::string& id); // definitions folded, then instantiated
    RationalExpr fxr(const std::string& id) { return rat_of(fxp(id)); }

    void touch(const std::string& id);
    void note(const std::string& text);
    void side(const MultiPoly& expr, const std::string& reason);
    // for expressions too large to print in the ledger
    void side_named(const std::string& expr, const std::string& reason);

    // Records a step (timing included) and returns ok.
    bool step(const std::string& kind, const std::string& name, bool ok,
              const std::string& detail = {}, std::vector<std::string> fixtures = {});

    // Candidate against the stored fixture (expanded=true folds definitions
    // first). Match up to a rational unit times content counts as success;
    // the ratio lands in the step detail.
    MatchResult match(const std::string& kind, const std::string& id, const MultiPoly& cand,
                      bool expanded = false, const std::string& name = {});
    // Adopted verbatim from the reference set (curvature evaluations etc.).
    void premise(const std::string& id, const std::string& why);
    // target fixture == sum multiplier * premise fixture, in stored form.
    bool combination(const std::string& name, const MultiPoly& target,
                     const std::vector<std::pair<MultiPoly, MultiPoly>>& parts,
                     std::vector<std::string> fixtures);
    // Defining relation id must vanish under the substitution.
    bool relation(const std::string& id, const std::map<SymbolId, RationalExpr>& sub,
                  const std::string& name = {});
    bool assert_zero(const std::string& name, const MultiPoly& e,
                     const std::string& detail = {}, std::vector<std::string> fixtures = {});

    // Divide out factors known nonzero, recording each as a side condition.
    MultiPoly strip(MultiPoly e,
                    const std::vector<std::pair<MultiPoly, std::string>>& factors);
    // Divide by factor while exactly divisible; returns the multiplicity.
    int strip_all(MultiPoly& e, const MultiPoly& factor);

    // Solve a defining-relation fixture (linear in sym) for sym.
    RationalExpr solve_defining(const std::string& id, SymbolId sym);

    SamplePlan residual_plan() const;
    SamplePlan witness_plan() const;
    std::vector<MultiPoly> assumption_exprs() const;

    // Terminal certificates. finish_nonvanishing certifies that `final` is
    // not the zero polynomial: by a constant coefficient when one exists,
    // otherwise by a sampled witness (through the tower when given).
    void finish_nonvanishing(const MultiPoly& final_poly, SymbolId variable,
                             const std::vector<ChainStage>& tower = {});
    void finish_contradiction(const MultiPoly& final_poly, const std::string& why);
    void finish_verified(const std::string& summary);

private:
    friend VerificationReport run_pipeline(const std::string&, const ScenarioProfile&,
                                           const RunOptions&);
    void settle_verdict(Verdict intended);
    double lap();
    std::chrono::steady_clock::time_point start_, last_;
    std::set<std::string> touched_;
};

} // namespace cmc
