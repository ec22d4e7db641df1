#include "cmc/elimination.hpp"
#include "cmc/replay.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#ifndef CMC_DEFAULT_FIXTURES
#define CMC_DEFAULT_FIXTURES "data/fixtures.json"
#endif

// exit codes: 0 all certificates good, 1 verification failure,
// 2 configuration or parse error, 3 resource guard tripped
namespace {

using namespace cmc;

struct Job {
    std::string pipeline;
    ScenarioProfile prof;
};

Q parse_rational(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw cas_error("not a rational number: " + text);
    q.canonicalize();
    return q;
}

// the reference display set fixes the concrete instantiations it is printed at
std::vector<Job> default_matrix() {
    std::vector<Job> jobs;
    jobs.push_back({"lemma4_1", {}});
    jobs.push_back({"lemma4_2a", {}});
    jobs.push_back({"lemma4_2b", {}});
    const long trips[3][3] = {{1, 1, 1}, {2, 1, 1}, {1, 2, 3}};
    for (const char* name : {"case1A", "case1B"})
        for (const auto& t : trips)
            for (int c : {-1, 0, 1}) {
                ScenarioProfile p;
                p.p = t[0];
                p.q = t[1];
                p.r = t[2];
                p.curvature = Q(c);
                p.norm = Q(7);
                jobs.push_back({name, p});
            }
    for (long pp : {1L, 2L}) {
        ScenarioProfile p;
        p.p = pp;
        jobs.push_back({"case2", p});
    }
    jobs.push_back({"case3", {}});
    return jobs;
}

struct VerifyArgs {
    std::vector<std::string> targets;
    std::string multiplicities;
    std::string curvature, norm;
    long dimension = 0;
    std::uint64_t seed = 1;
    std::string format = "text";
    std::size_t max_terms = 5000000;
    long budget_secs = 0;
    std::string fixtures;
    std::string out;
    unsigned jobs = 1;
};

int cmd_verify(const VerifyArgs& a) {
    RunOptions opt;
    opt.seed = a.seed;
    opt.max_terms = a.max_terms;
    opt.budget_secs = a.budget_secs;
    opt.fixtures_path = a.fixtures;

    bool all = a.targets.empty();
    for (const std::string& t : a.targets)
        if (t == "all") all = true;

    std::vector<Job> jobs;
    if (all) {
        jobs = default_matrix();
    } else {
        ScenarioProfile prof;
        if (!a.multiplicities.empty()) {
            std::vector<long> m;
            std::stringstream ss(a.multiplicities);
            std::string piece;
            while (std::getline(ss, piece, ','))
                m.push_back(std::stol(piece));
            if (m.size() == 1) {
                prof.p = m[0];
            } else if (m.size() == 3) {
                prof.p = m[0];
                prof.q = m[1];
                prof.r = m[2];
            } else {
                throw cas_error("--multiplicities takes p or p,q,r");
            }
        }
        if (!a.curvature.empty()) prof.curvature = parse_rational(a.curvature);
        if (!a.norm.empty()) prof.norm = parse_rational(a.norm);
        prof.n = a.dimension;
        for (const std::string& t : a.targets)
            jobs.push_back({t, prof});
    }

    // dry-run the profile validation so configuration errors exit 2 before
    // any pipeline starts
    for (const Job& j : jobs)
        if (std::find(pipeline_names().begin(), pipeline_names().end(), j.pipeline) ==
            pipeline_names().end())
            throw unknown_profile("unknown pipeline " + j.pipeline);

    std::vector<VerificationReport> reports(jobs.size());
    std::vector<char> done(jobs.size(), 0);
    std::atomic<std::size_t> next{0};
    std::atomic<int> abort_code{0};
    std::mutex mx;
    std::string abort_what;
    std::size_t printed = 0;
    bool stream_text = a.format == "text";

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size() || abort_code.load()) return;
            try {
                VerificationReport r = run_pipeline(jobs[i].pipeline, jobs[i].prof, opt);
                std::lock_guard<std::mutex> lk(mx);
                reports[i] = std::move(r);
                done[i] = 1;
                if (stream_text)
                    while (printed < jobs.size() && done[printed])
                        std::cout << report_text(reports[printed++]) << std::flush;
            } catch (const resource_limit& e) {
                std::lock_guard<std::mutex> lk(mx);
                abort_what = std::string("resource guard: ") + e.what();
                abort_code = 3;
                return;
            } catch (const cas_error& e) {
                std::lock_guard<std::mutex> lk(mx);
                abort_what = jobs[i].pipeline + ": " + e.what();
                abort_code = 2;
                return;
            }
        }
    };

    unsigned nthreads = std::max(1u, std::min<unsigned>(a.jobs, jobs.size()));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nthreads; ++i)
            pool.emplace_back(worker);
        for (std::thread& t : pool)
            t.join();
    }

    if (abort_code.load()) {
        std::cerr << "error: " << abort_what << "\n";
        return abort_code.load();
    }

    if (a.format == "json")
        std::cout << reports_json(reports).dump(2) << "\n";
    if (!a.out.empty()) {
        std::ofstream os(a.out);
        if (!os) throw cas_error("cannot write " + a.out);
        os << reports_json(reports).dump(2) << "\n";
    }

    int failures = 0;
    for (const VerificationReport& r : reports)
        if (!r.ok()) {
            ++failures;
            std::cerr << "FAILED: " << r.pipeline << " [" << r.profile
                      << "] verdict " << verdict_text(r.verdict) << "\n";
        }

    if (all) {
        // a full run must touch every reference equation
        SymbolTable tbl;
        FixtureSet fx = FixtureSet::load_file(
            a.fixtures.empty() ? CMC_DEFAULT_FIXTURES : a.fixtures, tbl);
        std::set<std::string> touched;
        for (const VerificationReport& r : reports)
            touched.insert(r.fixtures_matched.begin(), r.fixtures_matched.end());
        std::vector<std::string> missing;
        for (const std::string& id : fx.ids())
            if (!touched.count(id))
                missing.push_back(id);
        std::ostream& cov = stream_text ? std::cout : std::cerr;
        cov << "coverage: " << (fx.ids().size() - missing.size()) << "/" << fx.ids().size()
            << " reference equations touched\n";
        for (const std::string& id : missing)
            cov << "  never touched: " << id << "\n";
        if (!missing.empty()) ++failures;
    }

    if (stream_text)
        std::cout << jobs.size() << " run(s), " << (jobs.size() - static_cast<std::size_t>(
                         std::count_if(reports.begin(), reports.end(),
                                       [](const VerificationReport& r) { return !r.ok(); })))
                  << " ok\n";
    return failures ? 1 : 0;
}

int cmd_resultant(const std::string& ftext, const std::string& gtext, const std::string& var,
                  bool raw) {
    SymbolTable tbl;
    MultiPoly f = parse_poly(ftext, tbl, true);
    MultiPoly g = parse_poly(gtext, tbl, true);
    SymbolId x = tbl.id(var);
    if (x < 0)
        throw both_constant("variable " + var + " occurs in neither input");
    MultiPoly res = resultant(f, g, x);
    if (!raw && !res.is_zero()) {
        // canonical sign only: the exact value is the point of the command
        if (res.t.front().c < 0) res = neg(res);
    }
    std::cout << to_text(res, tbl) << "\n";
    return 0;
}

Verdict verdict_of(const std::string& text) {
    if (text == "ForcesConstancy") return Verdict::ForcesConstancy;
    if (text == "ContradictionCertified") return Verdict::ContradictionCertified;
    if (text == "Verified") return Verdict::Verified;
    if (text == "FixtureMismatch") return Verdict::FixtureMismatch;
    return Verdict::Inconclusive;
}

VerificationReport report_of(const nlohmann::ordered_json& j) {
    VerificationReport r;
    r.pipeline = j.value("pipeline", std::string{});
    r.profile = j.value("profile", std::string{});
    r.seed = j.value("seed", std::uint64_t{0});
    r.verdict = verdict_of(j.value("verdict", std::string{"Inconclusive"}));
    if (j.contains("steps"))
        for (const auto& js : j["steps"]) {
            StepRecord s;
            s.kind = js.value("kind", std::string{});
            s.name = js.value("name", std::string{});
            s.ok = js.value("ok", false);
            s.detail = js.value("detail", std::string{});
            if (js.contains("fixtures"))
                s.fixtures = js["fixtures"].get<std::vector<std::string>>();
            r.steps.push_back(std::move(s));
        }
    if (j.contains("side_conditions"))
        for (const auto& js : j["side_conditions"])
            r.side_conditions.push_back(
                {js.value("expr", std::string{}), js.value("reason", std::string{})});
    if (j.contains("fixtures_matched"))
        r.fixtures_matched = j["fixtures_matched"].get<std::vector<std::string>>();
    if (j.contains("notes"))
        r.notes = j["notes"].get<std::vector<std::string>>();
    if (j.contains("certificate") && !j["certificate"].is_null()) {
        CertificateRecord c;
        const auto& jc = j["certificate"];
        c.final_text = jc.value("final", std::string{});
        c.variable = jc.value("variable", std::string{});
        if (jc.contains("witness") && !jc["witness"].is_null()) {
            WitnessRecord w;
            for (const auto& e : jc["witness"]["point"])
                w.point.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
            w.value = jc["witness"].value("value", std::string{});
            w.seed = jc["witness"].value("seed", std::uint64_t{0});
            c.witness = std::move(w);
        }
        r.certificate = std::move(c);
    }
    return r;
}

int cmd_report(const std::string& path, const std::string& format) {
    std::ifstream is(path);
    if (!is)
        throw cas_error("cannot read " + path);
    nlohmann::ordered_json j;
    try {
        is >> j;
    } catch (const std::exception& e) {
        throw cas_error(std::string("bad report file: ") + e.what());
    }
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::vector<nlohmann::ordered_json> runs;
    if (j.contains("runs"))
        for (const auto& r : j["runs"])
            runs.push_back(r);
    else if (j.contains("pipeline"))
        runs.push_back(j);
    std::cout << "report: " << runs.size() << " run(s)\n";
    for (const auto& r : runs)
        std::cout << report_text(report_of(r));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact replay of the constant-mean-curvature case analysis"};
    app.require_subcommand(0, 1);

    VerifyArgs va;
    CLI::App* vf = app.add_subcommand("verify", "run verification pipelines");
    vf->add_option("targets", va.targets, "pipeline names, or 'all' for the default matrix");
    vf->add_option("--pipeline", va.targets, "pipeline name (repeatable)");
    vf->add_option("--multiplicities", va.multiplicities, "p or p,q,r (0 = symbolic)");
    vf->add_option("--curvature", va.curvature, "ambient curvature c as a rational");
    vf->add_option("--norm", va.norm, "squared norm beta as a rational");
    vf->add_option("--dimension", va.dimension, "dimension n (0 = symbolic)");
    vf->add_option("--seed", va.seed, "sampling seed")->envname("CMC_SEED");
    vf->add_option("--format", va.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("CMC_FORMAT");
    vf->add_option("--max-terms", va.max_terms, "term-count guard")->envname("CMC_MAX_TERMS");
    vf->add_option("--budget-secs", va.budget_secs, "wall-clock guard per pipeline")
        ->envname("CMC_BUDGET_SECS");
    vf->add_option("--fixtures", va.fixtures, "reference equation file")->envname("CMC_FIXTURES");
    vf->add_option("--out", va.out, "also write the json report here");
    vf->add_option("--jobs", va.jobs, "worker threads")->envname("CMC_JOBS");

    std::string rf, rg, rvar;
    bool rraw = false;
    CLI::App* rs = app.add_subcommand("resultant", "eliminate a variable from two polynomials");
    rs->add_option("f", rf, "first polynomial")->required();
    rs->add_option("g", rg, "second polynomial")->required();
    rs->add_option("var", rvar, "variable to eliminate")->required();
    rs->add_flag("--raw", rraw, "skip sign normalization");

    std::string rp_path, rp_format = "text";
    CLI::App* rp = app.add_subcommand("report", "re-render a saved json report");
    rp->add_option("path", rp_path, "report file")->required();
    rp->add_option("--format", rp_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (rs->parsed())
            return cmd_resultant(rf, rg, rvar, rraw);
        if (rp->parsed())
            return cmd_report(rp_path, rp_format);
        return cmd_verify(va);
    } catch (const resource_limit& e) {
        std::cerr << "error: resource guard: " << e.what() << "\n";
        return 3;
    } catch (const cas_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
