#pragma once

#include "cmc/elimination.hpp"
#include "cmc/frame.hpp"

#include <optional>

namespace cmc {

// Shape-operator spectrum cases: four distinct principal curvatures with
// multiplicities (1,p,q,r) — generic or with the common slope ansatz — three
// with (1,p,n-p-1), two with (1,n-1).
enum class CaseTag { FourA, FourB, Three, Two };

struct ScenarioProfile {
    CaseTag tag = CaseTag::FourA;
    // 0 means "keep the multiplicity symbolic".
    long p = 0, q = 0, r = 0;
    long n = 0;
    std::optional<Q> curvature; // ambient c
    std::optional<Q> norm;      // beta
};

std::string profile_text(const ScenarioProfile&);

struct ConstraintSet {
    MultiPoly trace; // = 0
    MultiPoly norm;  // = 0
    std::vector<MultiPoly> extras;
};

// Registered symbol ids, one instance per context. Registration order is
// fixed: it pins the monomial order and therefore every canonical text.
struct Symbols {
    SymbolId lam1, lam_u, lam_v, lam_w, lam;
    SymbolId w_uu1, w_vv1, w_ww1;
    SymbolId w_vv_u, w_ww_u;
    SymbolId w_vu_w, w_uv_w, w_uw_v, w_wu_v, w_vw_u, w_wv_u;
    SymbolId alpha, phi;
    SymbolId a1, L, A, B, C, D, mu;
    SymbolId beta, c, p, q, r, n, H, e1_H;
    SymbolId e1_lam1, e1e1_lam1, e1_lam_u, e1_mu, e1_alpha, e1_phi;
    SymbolId eu_lam_u, eu_lam_v, eu_lam_w, eu_a1, eu_w_uu1, eu_w_vv1, eu_w_ww1;
    SymbolId ej_lam_u, ei_lam_v, w_uu_j, w_vv_i;
    SymbolId w_ik_j, w_ij_k, w_ji_k, w_jk_i;
    SymbolId f1, f2, f3, f4, f5, f6, f7, f8, g1, g2, b0, b1, b2;
    SymbolId v[14];
};

struct ScenarioContext {
    SymbolTable table;
    Symbols s;
    ScenarioProfile profile;
    std::vector<SideCondition> assumptions; // distinctness etc.

    MultiPoly parse(const std::string& text) { return parse_poly(text, table, false); }
    std::string text(const MultiPoly& e) const { return to_text(e, table); }

    // Profile-concrete value of a parameter symbol, as a polynomial.
    MultiPoly param(SymbolId id) const;
    // Substitute concrete profile parameters (and n = p+q+r+1 in the
    // four-curvature cases) into e.
    MultiPoly instantiate(const MultiPoly& e) const;
    RationalExpr instantiate(const RationalExpr& e) const;
};

ScenarioContext make_context(const ScenarioProfile&);

ConstraintSet build_constraints(const ScenarioContext&);

// Substitute the target's linear solution from the trace constraint into e
// and clear the multiplicity denominator; the result contains no target.
MultiPoly eliminate_by_trace(const MultiPoly& e, SymbolId target, const ConstraintSet& cs);

Q scalar_curvature(long n, const Q& c, const Q& H, const Q& beta);
MultiPoly scalar_curvature_symbolic(ScenarioContext&);

// Frame derivations with the per-case rewrite rules. Keys: "e1" always;
// "eu" for FourA; Three adds "ej"/"ei". FourB's e1 carries the common-slope
// rules. Throws unknown_profile for combinations that have no rule set.
std::map<std::string, Derivation> standard_derivations(const ScenarioContext&);

} // namespace cmc
