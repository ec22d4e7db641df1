#include "cmc/report.hpp"

#include <iomanip>
#include <sstream>

namespace cmc {

std::string verdict_text(Verdict v) {
    switch (v) {
    case Verdict::ForcesConstancy: return "ForcesConstancy";
    case Verdict::ContradictionCertified: return "ContradictionCertified";
    case Verdict::Verified: return "Verified";
    case Verdict::FixtureMismatch: return "FixtureMismatch";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

bool VerificationReport::ok() const {
    if (verdict != Verdict::ForcesConstancy &&
        verdict != Verdict::ContradictionCertified && verdict != Verdict::Verified)
        return false;
    for (const StepRecord& s : steps)
        if (!s.ok)
            return false;
    return true;
}

nlohmann::ordered_json report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["pipeline"] = r.pipeline;
    j["profile"] = r.profile;
    j["seed"] = r.seed;
    j["verdict"] = verdict_text(r.verdict);
    j["ok"] = r.ok();
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const StepRecord& s : r.steps) {
        nlohmann::ordered_json js;
        js["kind"] = s.kind;
        js["name"] = s.name;
        js["ok"] = s.ok;
        if (!s.detail.empty())
            js["detail"] = s.detail;
        if (!s.fixtures.empty())
            js["fixtures"] = s.fixtures;
        steps.push_back(std::move(js));
    }
    j["steps"] = std::move(steps);
    nlohmann::ordered_json sides = nlohmann::ordered_json::array();
    for (const SideConditionRecord& s : r.side_conditions)
        sides.push_back({{"expr", s.expr}, {"reason", s.reason}});
    j["side_conditions"] = std::move(sides);
    j["fixtures_matched"] = r.fixtures_matched;
    j["notes"] = r.notes;
    if (r.certificate) {
        nlohmann::ordered_json jc;
        jc["final"] = r.certificate->final_text;
        jc["variable"] = r.certificate->variable;
        if (r.certificate->witness) {
            nlohmann::ordered_json jw;
            nlohmann::ordered_json pt = nlohmann::ordered_json::array();
            for (const auto& [k, v] : r.certificate->witness->point)
                pt.push_back({k, v});
            jw["point"] = std::move(pt);
            jw["value"] = r.certificate->witness->value;
            jw["seed"] = r.certificate->witness->seed;
            jc["witness"] = std::move(jw);
        } else {
            jc["witness"] = nullptr;
        }
        j["certificate"] = std::move(jc);
    } else {
        j["certificate"] = nullptr;
    }
    return j;
}

nlohmann::ordered_json reports_json(const std::vector<VerificationReport>& rs) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    nlohmann::ordered_json runs = nlohmann::ordered_json::array();
    for (const VerificationReport& r : rs)
        runs.push_back(report_json(r));
    j["runs"] = std::move(runs);
    return j;
}

namespace {

std::string fmt_secs(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(s < 0.01 ? 4 : 2) << s << "s";
    return os.str();
}

} // namespace

std::string report_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "== " << r.pipeline << " [" << r.profile << "] seed=" << r.seed << "\n";
    for (const StepRecord& s : r.steps) {
        os << "  " << (s.ok ? "ok " : "FAIL") << " " << std::left << std::setw(17)
           << s.kind << " " << s.name;
        if (!s.fixtures.empty()) {
            os << "  [";
            for (size_t i = 0; i < s.fixtures.size(); ++i)
                os << (i ? " " : "") << s.fixtures[i];
            os << "]";
        }
        if (s.seconds >= 0.005)
            os << "  (" << fmt_secs(s.seconds) << ")";
        if (!s.detail.empty())
            os << "\n       " << s.detail;
        os << "\n";
    }
    if (!r.side_conditions.empty()) {
        os << "  side conditions (valid wherever each is nonzero):\n";
        for (const SideConditionRecord& s : r.side_conditions)
            os << "    " << s.expr << "  -- " << s.reason << "\n";
    }
    if (!r.notes.empty()) {
        os << "  notes:\n";
        for (const std::string& n : r.notes)
            os << "    " << n << "\n";
    }
    if (r.certificate) {
        os << "  certificate: " << r.certificate->final_text;
        if (!r.certificate->variable.empty())
            os << "  (variable " << r.certificate->variable << ")";
        os << "\n";
        if (r.certificate->witness) {
            os << "  witness (seed " << r.certificate->witness->seed << "): value "
               << r.certificate->witness->value << " at";
            for (const auto& [k, v] : r.certificate->witness->point)
                os << " " << k << "=" << v;
            os << "\n";
        }
    }
    os << "  verdict: " << verdict_text(r.verdict) << (r.ok() ? "" : "  [NOT OK]")
       << "  (" << fmt_secs(r.seconds) << ")\n";
    return os.str();
}

} // namespace cmc
