#include "cmc/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "cmc/errors.hpp"
#include "json.hpp"

namespace cmc {

FixtureSet FixtureSet::load_file(const std::string& path, SymbolTable& table) {
    std::ifstream in(path);
    if (!in) throw unknown_fixture("cannot open fixtures file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_text(buf.str(), table);
}

FixtureSet FixtureSet::load_text(const std::string& json, SymbolTable& table) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(json);
    } catch (const std::exception& e) {
        throw parse_error(std::string("fixtures file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw parse_error("fixtures file must be a JSON object");
    FixtureSet fx;
    for (auto& [id, value] : doc.items()) {
        if (!value.is_string())
            throw parse_error("fixture '" + id + "' must map to a polynomial text");
        Entry e;
        e.text = value.get<std::string>();
        try {
            e.poly = parse_poly(e.text, table, /*auto_register=*/false);
        } catch (const cas_error& err) {
            throw parse_error("fixture '" + id + "': " + err.what());
        }
        if (id.rfind("e:", 0) != 0) {
            SymbolId s = table.id(id);
            if (s < 0)
                throw parse_error("fixture id '" + id + "' is neither an equation id nor a known symbol");
            if (!contains_symbol(e.poly, s)) e.defines = s;
        }
        fx.order_.push_back(id);
        fx.entries_.push_back(std::move(e));
    }
    fx.keys_ = fx.order_;
    std::sort(fx.keys_.begin(), fx.keys_.end());
    if (std::adjacent_find(fx.keys_.begin(), fx.keys_.end()) != fx.keys_.end())
        throw parse_error("duplicate fixture id in fixtures file");
    fx.index_.resize(fx.keys_.size());
    for (size_t i = 0; i < fx.order_.size(); ++i) {
        auto it = std::lower_bound(fx.keys_.begin(), fx.keys_.end(), fx.order_[i]);
        fx.index_[static_cast<size_t>(it - fx.keys_.begin())] = i;
    }
    return fx;
}

const FixtureSet::Entry& FixtureSet::entry(const std::string& id) const {
    auto it = std::lower_bound(keys_.begin(), keys_.end(), id);
    if (it == keys_.end() || *it != id) throw unknown_fixture("unknown fixture id: " + id);
    return entries_[index_[static_cast<size_t>(it - keys_.begin())]];
}

bool FixtureSet::contains(const std::string& id) const {
    auto it = std::lower_bound(keys_.begin(), keys_.end(), id);
    return it != keys_.end() && *it == id;
}

const MultiPoly& FixtureSet::poly(const std::string& id) const { return entry(id).poly; }
const std::string& FixtureSet::text(const std::string& id) const { return entry(id).text; }

MultiPoly FixtureSet::expanded(const std::string& id) const {
    MultiPoly p = entry(id).poly;
    std::map<SymbolId, MultiPoly> defs;
    for (const auto& e : entries_)
        if (e.defines) defs[*e.defines] = e.poly;
    for (int round = 0; round < 8; ++round) {
        bool hit = false;
        for (const auto& [s, rhs] : defs)
            if (contains_symbol(p, s)) {
                p = substitute(p, s, rhs);
                hit = true;
            }
        if (!hit) return p;
    }
    throw step_failure("fixture definitions do not terminate while expanding " + id);
}

MatchResult match_polys(const MultiPoly& candidate, const MultiPoly& reference) {
    MatchResult r;
    if (candidate.is_zero() && reference.is_zero()) {
        r.kind = MatchResult::Kind::Exact;
        return r;
    }
    if (!candidate.is_zero() && !reference.is_zero()) {
        MultiPoly nc = normalize(candidate);
        MultiPoly nr = normalize(reference);
        if (nc == nr) {
            r.ratio = content(candidate) / content(reference);
            r.kind = r.ratio == 1 ? MatchResult::Kind::Exact : MatchResult::Kind::UpToUnitContent;
            return r;
        }
        r.kind = MatchResult::Kind::Mismatch;
        r.diff = sub(nc, nr);
        MultiPoly quot;
        if (try_exact_divide(nc, nr, quot)) {
            r.cofactor = quot;
            r.reference_divides_candidate = true;
        } else if (try_exact_divide(nr, nc, quot)) {
            r.cofactor = quot;
            r.reference_divides_candidate = false;
        }
        return r;
    }
    r.kind = MatchResult::Kind::Mismatch;
    r.diff = sub(normalize(candidate), normalize(reference));
    return r;
}

MatchResult match_fixture(const MultiPoly& e, const std::string& id, const FixtureSet& fx) {
    return match_polys(e, fx.poly(id));
}

std::string match_text(const MatchResult& m, const SymbolTable& table) {
    switch (m.kind) {
    case MatchResult::Kind::Exact:
        return "exact";
    case MatchResult::Kind::UpToUnitContent:
        return "matches up to factor " + q_text(m.ratio);
    case MatchResult::Kind::Mismatch: {
        std::string s = "mismatch, difference " + to_text(m.diff, table);
        if (m.cofactor)
            s += m.reference_divides_candidate
                     ? ", candidate = reference * (" + to_text(*m.cofactor, table) + ")"
                     : ", reference = candidate * (" + to_text(*m.cofactor, table) + ")";
        return s;
    }
    }
    return "?";
}

}  // namespace cmc
