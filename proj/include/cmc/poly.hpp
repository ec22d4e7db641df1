#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmc/errors.hpp"
#include "cmc/symbols.hpp"

namespace cmc {

using Q = mpq_class;

Q make_q(long num, long den = 1);
Q parse_q(const std::string& text);
std::string q_text(const Q& value);

// Exponent vector with trailing zeros trimmed; `deg` caches the total degree.
struct Monomial {
    uint32_t deg = 0;
    std::vector<uint16_t> e;

    bool is_unit() const { return e.empty(); }
    uint16_t exp(SymbolId s) const {
        return (s >= 0 && static_cast<size_t>(s) < e.size()) ? e[static_cast<size_t>(s)] : 0;
    }
    void trim();
    bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
};

// Graded lexicographic order: total degree first, ties broken by the earliest
// registered symbol with a differing exponent (higher exponent wins).
int mono_cmp(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& b, const Monomial& a); // b / a, precondition a | b
Monomial mono_of(SymbolId s, uint16_t k = 1);

struct Term {
    Monomial m;
    Q c;
};

// Immutable sparse polynomial over Q. Terms are held strictly descending in
// the monomial order with no zero coefficients; the zero polynomial is the
// empty term list.
struct MultiPoly {
    std::vector<Term> t;

    bool is_zero() const { return t.empty(); }
    bool is_constant() const { return t.empty() || t.front().m.is_unit(); }
    size_t term_count() const { return t.size(); }
    const Term& leading() const { return t.front(); }
    bool operator==(const MultiPoly& o) const;
};

MultiPoly poly_zero();
MultiPoly poly_const(const Q& c);
MultiPoly poly_symbol(SymbolId s);

MultiPoly add(const MultiPoly& a, const MultiPoly& b);
MultiPoly sub(const MultiPoly& a, const MultiPoly& b);
MultiPoly neg(const MultiPoly& a);
MultiPoly scale(const MultiPoly& a, const Q& k);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly mul_term(const MultiPoly& a, const Term& t);
MultiPoly pow_u(const MultiPoly& a, unsigned k);

MultiPoly partial_derivative(const MultiPoly& p, SymbolId x);

// Exact division in Q[symbols]; throws not_divisible when no polynomial
// quotient exists.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);
bool try_exact_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly& quotient);

// Signed rational content: p == scale(normalize(p), content(p)) with the
// normalized leading coefficient positive. content(0) == 0.
Q content(const MultiPoly& p);
MultiPoly normalize(const MultiPoly& p);

uint32_t total_degree(const MultiPoly& p);
int degree_in(const MultiPoly& p, SymbolId x); // -1 for the zero polynomial
bool contains_symbol(const MultiPoly& p, SymbolId x);
std::vector<SymbolId> support(const MultiPoly& p);

// Coefficients of p viewed in Q[other symbols][x], ascending in x.
std::vector<MultiPoly> as_univariate(const MultiPoly& p, SymbolId x);
MultiPoly from_univariate(const std::vector<MultiPoly>& coeffs, SymbolId x);
MultiPoly coeff_in(const MultiPoly& p, SymbolId x, unsigned k);

Q evaluate(const MultiPoly& p, const std::map<SymbolId, Q>& assignment);
MultiPoly substitute(const MultiPoly& p, SymbolId x, const Q& value);
MultiPoly substitute(const MultiPoly& p, SymbolId x, const MultiPoly& value);
MultiPoly substitute(const MultiPoly& p, const std::map<SymbolId, MultiPoly>& values);

// Canonical text I/O. Parsing accepts the canonical grammar plus parentheses;
// printing always emits the flat expanded form.
MultiPoly parse_poly(const std::string& text, SymbolTable& table, bool auto_register = false);
std::string to_text(const MultiPoly& p, const SymbolTable& table);

// Term budget shared by the expensive kernels. `step` names the pipeline
// stage for the resource error message.
struct ResourceGuard {
    size_t max_terms = 5000000;
    std::string step;
};
ResourceGuard& resource_guard();
void guard_terms(size_t n);

struct ScopedStepName {
    explicit ScopedStepName(std::string name) : prev(std::move(resource_guard().step)) {
        resource_guard().step = std::move(name);
    }
    ~ScopedStepName() { resource_guard().step = std::move(prev); }
    std::string prev;
};

} // namespace cmc
