#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmc/poly.hpp"
#include "cmc/symbols.hpp"

namespace cmc {

// Reference equations and named coefficients, loaded from a flat JSON object
// mapping id -> polynomial text. Ids of the form "e:..." are equations (stored
// as lhs - rhs, so the reference value is 0); bare ids name table symbols and
// carry either a substitutable right-hand side or, when the entry mentions its
// own symbol, an implicit defining relation that is checked rather than
// substituted.
class FixtureSet {
public:
    static FixtureSet load_file(const std::string& path, SymbolTable& table);
    static FixtureSet load_text(const std::string& json, SymbolTable& table);

    bool contains(const std::string& id) const;
    const MultiPoly& poly(const std::string& id) const;  // as parsed
    const std::string& text(const std::string& id) const;
    MultiPoly expanded(const std::string& id) const;  // substitutable definitions folded in
    const std::vector<std::string>& ids() const { return order_; }

private:
    struct Entry {
        std::string text;
        MultiPoly poly;
        std::optional<SymbolId> defines;  // set when the id names a symbol and
                                          // the text does not mention it
    };
    const Entry& entry(const std::string& id) const;
    std::vector<std::string> order_;
    std::vector<Entry> entries_;
    std::vector<std::string> keys_;  // sorted, parallel to index_
    std::vector<size_t> index_;
};

struct MatchResult {
    enum class Kind { Exact, UpToUnitContent, Mismatch };
    Kind kind = Kind::Mismatch;
    Q ratio = 1;                         // candidate = ratio * reference (content match)
    MultiPoly diff;                      // normalize(candidate) - normalize(reference)
    std::optional<MultiPoly> cofactor;   // nonconstant quotient when one side divides the other
    bool reference_divides_candidate = false;

    bool ok() const { return kind != Kind::Mismatch; }
};

// Compares candidate against reference modulo a nonzero rational factor.
MatchResult match_polys(const MultiPoly& candidate, const MultiPoly& reference);

// Spec entry point: candidate against the stored (unexpanded) fixture.
MatchResult match_fixture(const MultiPoly& e, const std::string& id, const FixtureSet& fx);

std::string match_text(const MatchResult& m, const SymbolTable& table);

}  // namespace cmc
