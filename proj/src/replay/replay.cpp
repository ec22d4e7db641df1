#include "cmc/replay.hpp"

#include "cmc/errors.hpp"

#include <algorithm>
#include <sstream>

#ifndef CMC_DEFAULT_FIXTURES
#define CMC_DEFAULT_FIXTURES "data/fixtures.json"
#endif

namespace cmc {

namespace pipelines {
void lemma4_1(PipelineRun&);
void lemma4_2a(PipelineRun&);
void lemma4_2b(PipelineRun&);
void case1A(PipelineRun&);
void case1B(PipelineRun&);
void case2(PipelineRun&);
void case3(PipelineRun&);
} // namespace pipelines

std::vector<std::string> pipeline_names() {
    return {"lemma4_1", "lemma4_2a", "lemma4_2b", "case1A", "case1B", "case2", "case3"};
}

bool check_combination(const MultiPoly& target,
                       const std::vector<std::pair<MultiPoly, MultiPoly>>& parts) {
    MultiPoly acc = target;
    for (const auto& [m, premise] : parts)
        acc = sub(acc, mul(m, premise));
    return acc.is_zero();
}

RationalExpr eval_rational(const MultiPoly& p, const std::map<SymbolId, RationalExpr>& subs) {
    RationalExpr acc = rat_of(poly_zero());
    for (const Term& t : p.t) {
        RationalExpr term = rat_of(poly_const(t.c));
        for (size_t i = 0; i < t.m.e.size(); ++i) {
            unsigned k = t.m.e[i];
            if (!k)
                continue;
            SymbolId s = static_cast<SymbolId>(i);
            auto it = subs.find(s);
            RationalExpr base = it != subs.end() ? it->second : rat_of(poly_symbol(s));
            for (unsigned j = 0; j < k; ++j)
                term = rat_mul(term, base);
        }
        acc = rat_add(acc, term);
    }
    return rat_reduce(acc);
}

PipelineRun::PipelineRun(const std::string& pipeline, const ScenarioProfile& profile,
                         const RunOptions& options)
    : ctx(make_context(profile)),
      cs(build_constraints(ctx)),
      fx(FixtureSet::load_file(
          options.fixtures_path.empty() ? CMC_DEFAULT_FIXTURES : options.fixtures_path,
          ctx.table)),
      deriv(standard_derivations(ctx)),
      opt(options) {
    rep.pipeline = pipeline;
    rep.profile = profile_text(profile);
    rep.seed = opt.seed;
    start_ = last_ = std::chrono::steady_clock::now();
}

double PipelineRun::lap() {
    auto now = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
}

MultiPoly PipelineRun::fxp(const std::string& id) {
    touch(id);
    return ctx.instantiate(fx.poly(id));
}

MultiPoly PipelineRun::fxe(const std::string& id) {
    touch(id);
    return ctx.instantiate(fx.expanded(id));
}

void PipelineRun::touch(const std::string& id) {
    if (!fx.contains(id))
        throw unknown_fixture("no fixture named " + id);
    touched_.insert(id);
}

void PipelineRun::note(const std::string& text) { rep.notes.push_back(text); }

void PipelineRun::side(const MultiPoly& expr, const std::string& reason) {
    side_named(ctx.text(normalize(expr)), reason);
}

void PipelineRun::side_named(const std::string& expr, const std::string& reason) {
    for (const SideConditionRecord& s : rep.side_conditions)
        if (s.expr == expr)
            return;
    rep.side_conditions.push_back({expr, reason});
}

bool PipelineRun::step(const std::string& kind, const std::string& name, bool ok,
                       const std::string& detail, std::vector<std::string> fixtures) {
    resource_guard().step = name;
    StepRecord s;
    s.kind = kind;
    s.name = name;
    s.ok = ok;
    s.detail = detail;
    s.fixtures = std::move(fixtures);
    s.seconds = lap();
    rep.steps.push_back(std::move(s));
    if (opt.budget_secs > 0) {
        double total = std::chrono::duration<double>(last_ - start_).count();
        if (total > static_cast<double>(opt.budget_secs))
            throw resource_limit("time budget exceeded at step " + name);
    }
    return ok;
}

MatchResult PipelineRun::match(const std::string& kind, const std::string& id,
                               const MultiPoly& cand, bool expanded, const std::string& name) {
    MultiPoly ref = expanded ? fxe(id) : fxp(id);
    MatchResult m = match_polys(cand, ref);
    step(kind, name.empty() ? id : name, m.ok(), match_text(m, ctx.table), {id});
    return m;
}

void PipelineRun::premise(const std::string& id, const std::string& why) {
    touch(id);
    step("MatchFixture", id, true, "premise: " + why, {id});
}

bool PipelineRun::combination(const std::string& name, const MultiPoly& target,
                              const std::vector<std::pair<MultiPoly, MultiPoly>>& parts,
                              std::vector<std::string> fixtures) {
    bool ok = check_combination(target, parts);
    return step("Combine", name, ok,
                ok ? "target is exactly the stated combination" : "combination residue is nonzero",
                std::move(fixtures));
}

bool PipelineRun::relation(const std::string& id, const std::map<SymbolId, RationalExpr>& subs,
                           const std::string& name) {
    RationalExpr residual = eval_rational(fxp(id), subs);
    bool ok = residual.num.is_zero();
    return step("AssertZero", name.empty() ? id : name, ok,
                ok ? "residual is identically zero"
                   : "residual numerator: " + ctx.text(normalize(residual.num)),
                {id});
}

bool PipelineRun::assert_zero(const std::string& name, const MultiPoly& e,
                              const std::string& detail, std::vector<std::string> fixtures) {
    bool ok = e.is_zero();
    return step("AssertZero", name, ok,
                ok ? detail : "nonzero: " + ctx.text(normalize(e)), std::move(fixtures));
}

MultiPoly PipelineRun::strip(MultiPoly e,
                             const std::vector<std::pair<MultiPoly, std::string>>& factors) {
    for (const auto& [f, why] : factors) {
        MultiPoly quot;
        if (!try_exact_divide(e, f, quot))
            throw step_failure("expected factor " + ctx.text(f) + " does not divide");
        e = quot;
        if (!f.is_constant())
            side(f, why);
    }
    return e;
}

int PipelineRun::strip_all(MultiPoly& e, const MultiPoly& factor) {
    int count = 0;
    MultiPoly quot;
    while (!e.is_zero() && try_exact_divide(e, factor, quot)) {
        e = quot;
        ++count;
    }
    return count;
}

RationalExpr PipelineRun::solve_defining(const std::string& id, SymbolId sym) {
    MultiPoly rel = fxp(id);
    if (degree_in(rel, sym) != 1)
        throw step_failure("defining relation " + id + " is not linear in its symbol");
    MultiPoly coef = coeff_in(rel, sym, 1);
    if (contains_symbol(coef, sym))
        throw step_failure("defining relation " + id + " has entangled coefficient");
    MultiPoly rest = sub(rel, mul(coef, P(sym)));
    return rat_quotient(neg(rest), coef);
}

SamplePlan PipelineRun::residual_plan() const {
    return SamplePlan{opt.seed, opt.residual_bound, opt.residual_trials};
}

SamplePlan PipelineRun::witness_plan() const {
    return SamplePlan{opt.seed, opt.witness_bound, opt.witness_trials};
}

std::vector<MultiPoly> PipelineRun::assumption_exprs() const {
    std::vector<MultiPoly> out;
    for (const SideCondition& a : ctx.assumptions)
        out.push_back(ctx.instantiate(a.expr));
    return out;
}

namespace {

std::string describe_poly(const ScenarioContext& ctx, const MultiPoly& e) {
    std::string text = to_text(e, ctx.table);
    if (text.size() <= 2000)
        return text;
    std::ostringstream os;
    os << "<" << e.term_count() << " terms, total degree " << total_degree(e) << ">";
    return os.str();
}

WitnessRecord to_witness_record(const PointWitness& w, std::uint64_t seed,
                                const SymbolTable& table) {
    WitnessRecord rec;
    for (const auto& [s, v] : w.point)
        rec.point.emplace_back(table.name(s), q_text(v));
    std::sort(rec.point.begin(), rec.point.end());
    rec.value = q_text(w.value);
    rec.seed = seed;
    return rec;
}

} // namespace

void PipelineRun::settle_verdict(Verdict intended) {
    bool all_ok = true, mismatch = false;
    for (const StepRecord& s : rep.steps) {
        if (!s.ok) {
            all_ok = false;
            if (s.kind == "MatchFixture")
                mismatch = true;
        }
    }
    rep.verdict = all_ok ? intended : (mismatch ? Verdict::FixtureMismatch : Verdict::Inconclusive);
    rep.fixtures_matched.assign(touched_.begin(), touched_.end());
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

void PipelineRun::finish_nonvanishing(const MultiPoly& final_poly, SymbolId variable,
                                      const std::vector<ChainStage>& tower) {
    const Symbols& s = ctx.s;
    if (!tower.empty()) {
        // The closing eliminant is too large to expand; certify through the
        // specialized tower instead.
        try {
            PointWitness w =
                specialization_witness(tower, variable, witness_plan(), assumption_exprs(), ctx.table);
            step("SpecializeCheck", "terminal-eliminant", true,
                 "specialized tower evaluates nonzero at the witness point");
            CertificateRecord cert;
            cert.final_text = final_poly.is_zero() ? std::string("<resultant tower head>")
                                                   : describe_poly(ctx, final_poly);
            cert.variable = ctx.table.name(variable);
            cert.witness = to_witness_record(w, opt.seed, ctx.table);
            rep.certificate = std::move(cert);
            settle_verdict(Verdict::ForcesConstancy);
        } catch (const exhausted_trials& e) {
            step("SpecializeCheck", "terminal-eliminant", false, e.what());
            settle_verdict(Verdict::Inconclusive);
        }
        return;
    }

    if (final_poly.is_zero()) {
        step("SpecializeCheck", "terminal-eliminant", false, "eliminant is identically zero");
        settle_verdict(Verdict::Inconclusive);
        return;
    }
    std::set<SymbolId> params{s.p, s.q, s.r, s.n, s.c, s.beta};
    for (SymbolId v : support(final_poly)) {
        if (v == variable || params.count(v))
            continue;
        step("SpecializeCheck", "terminal-eliminant", false,
             std::string("eliminant still involves ") + ctx.table.name(v));
        settle_verdict(Verdict::Inconclusive);
        return;
    }
    int deg = degree_in(final_poly, variable);
    if (deg < 1) {
        step("SpecializeCheck", "terminal-eliminant", false,
             "eliminant does not involve the surviving variable");
        settle_verdict(Verdict::Inconclusive);
        return;
    }

    CertificateRecord cert;
    cert.final_text = describe_poly(ctx, final_poly);
    cert.variable = ctx.table.name(variable);

    for (int k = deg; k >= 0; --k) {
        MultiPoly ck = coeff_in(final_poly, variable, k);
        if (!ck.is_zero() && ck.is_constant()) {
            std::ostringstream os;
            os << "coefficient of " << ctx.table.name(variable) << "^" << k
               << " is the nonzero constant " << ctx.text(ck);
            step("SpecializeCheck", "terminal-eliminant", true, os.str());
            rep.certificate = std::move(cert);
            settle_verdict(Verdict::ForcesConstancy);
            return;
        }
    }

    ZeroTestResult zt = zero_test(final_poly, witness_plan(), assumption_exprs());
    if (zt.proved_nonzero) {
        step("SpecializeCheck", "terminal-eliminant", true,
             "nonzero value exhibited at a sampled point");
        cert.witness = to_witness_record(*zt.witness, opt.seed, ctx.table);
        rep.certificate = std::move(cert);
        settle_verdict(Verdict::ForcesConstancy);
        return;
    }
    step("SpecializeCheck", "terminal-eliminant", false,
         "no nonvanishing witness found; cannot certify");
    settle_verdict(Verdict::Inconclusive);
}

void PipelineRun::finish_contradiction(const MultiPoly& final_poly, const std::string& why) {
    CertificateRecord cert;
    cert.final_text = describe_poly(ctx, final_poly);
    rep.certificate = std::move(cert);
    note(why);
    settle_verdict(Verdict::ContradictionCertified);
}

void PipelineRun::finish_verified(const std::string& summary) {
    note(summary);
    settle_verdict(Verdict::Verified);
}

namespace {

void validate_profile(const std::string& name, ScenarioProfile& p) {
    auto all_zero = [&] { return p.p == 0 && p.q == 0 && p.r == 0; };
    auto all_pos = [&] { return p.p >= 1 && p.q >= 1 && p.r >= 1; };
    if (p.p < 0 || p.q < 0 || p.r < 0 || p.n < 0)
        throw unknown_profile("multiplicities must be nonnegative");
    if (name == "lemma4_1" || name == "lemma4_2a" || name == "lemma4_2b" || name == "case1A") {
        p.tag = CaseTag::FourA;
        if (!all_zero() && !all_pos())
            throw unknown_profile("four-curvature profiles need all multiplicities symbolic or all concrete");
        if (name == "case1A" && !all_pos())
            throw unknown_profile("case1A needs concrete multiplicities");
        p.n = 0; // n = p+q+r+1 is implied
    } else if (name == "case1B") {
        p.tag = CaseTag::FourB;
        if (!all_pos())
            throw unknown_profile("case1B needs concrete multiplicities");
        p.n = 0;
    } else if (name == "case2") {
        p.tag = CaseTag::Three;
        if (p.q != 0 || p.r != 0)
            throw unknown_profile("case2 takes a single multiplicity p");
        if (p.n != 0 && p.n < p.p + 2)
            throw unknown_profile("case2 needs n >= p+2");
    } else if (name == "case3") {
        p.tag = CaseTag::Two;
        if (p.p != 0 || p.q != 0 || p.r != 0)
            throw unknown_profile("case3 takes no multiplicities");
        if (p.n != 0 && p.n < 2)
            throw unknown_profile("case3 needs n >= 2");
    } else {
        throw unknown_profile("unknown pipeline " + name);
    }
}

} // namespace

VerificationReport run_pipeline(const std::string& name, const ScenarioProfile& profile,
                                const RunOptions& opt) {
    ScenarioProfile prof = profile;
    validate_profile(name, prof);

    resource_guard().max_terms = opt.max_terms;
    PipelineRun R(name, prof, opt);
    try {
        if (name == "lemma4_1") pipelines::lemma4_1(R);
        else if (name == "lemma4_2a") pipelines::lemma4_2a(R);
        else if (name == "lemma4_2b") pipelines::lemma4_2b(R);
        else if (name == "case1A") pipelines::case1A(R);
        else if (name == "case1B") pipelines::case1B(R);
        else if (name == "case2") pipelines::case2(R);
        else if (name == "case3") pipelines::case3(R);
    } catch (const resource_limit&) {
        throw; // resource aborts surface to the caller unchanged
    } catch (const cas_error& e) {
        R.step("AssertZero", "unexpected-failure", false, e.what());
        R.settle_verdict(Verdict::Inconclusive);
    }
    return R.rep;
}

} // namespace cmc
