#include "cmc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cmc {

Q make_q(long num, long den) {
    Q q(num, den);
    q.canonicalize();
    return q;
}

Q parse_q(const std::string& text) {
    Q q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw parse_error("bad rational literal: " + text);
    q.canonicalize();
    return q;
}

std::string q_text(const Q& value) { return value.get_str(); }

void Monomial::trim() {
    while (!e.empty() && e.back() == 0) e.pop_back();
    uint32_t d = 0;
    for (auto x : e) d += x;
    deg = d;
}

int mono_cmp(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    size_t n = std::max(a.e.size(), b.e.size());
    for (size_t i = 0; i < n; ++i) {
        uint16_t xa = i < a.e.size() ? a.e[i] : 0;
        uint16_t xb = i < b.e.size() ? b.e[i] : 0;
        if (xa != xb) return xa < xb ? -1 : 1;
    }
    return 0;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    if (a.e.size() > b.e.size()) return false;
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.e.resize(std::max(a.e.size(), b.e.size()), 0);
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i];
    for (size_t i = 0; i < b.e.size(); ++i) {
        unsigned v = r.e[i] + unsigned(b.e[i]);
        if (v > 0xffffu) throw resource_limit("monomial exponent overflow");
        r.e[i] = static_cast<uint16_t>(v);
    }
    r.deg = a.deg + b.deg;
    return r;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r = b;
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = static_cast<uint16_t>(r.e[i] - a.e[i]);
    r.trim();
    return r;
}

Monomial mono_of(SymbolId s, uint16_t k) {
    Monomial m;
    if (k > 0) {
        m.e.resize(static_cast<size_t>(s) + 1, 0);
        m.e[static_cast<size_t>(s)] = k;
        m.deg = k;
    }
    return m;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (t.size() != o.t.size()) return false;
    for (size_t i = 0; i < t.size(); ++i)
        if (!(t[i].m == o.t[i].m) || t[i].c != o.t[i].c) return false;
    return true;
}

MultiPoly poly_zero() { return {}; }

MultiPoly poly_const(const Q& c) {
    MultiPoly p;
    if (c != 0) p.t.push_back({Monomial{}, c});
    return p;
}

MultiPoly poly_symbol(SymbolId s) {
    MultiPoly p;
    p.t.push_back({mono_of(s), Q(1)});
    return p;
}

ResourceGuard& resource_guard() {
    thread_local ResourceGuard g;
    return g;
}

void guard_terms(size_t n) {
    const ResourceGuard& g = resource_guard();
    if (n > g.max_terms) {
        std::ostringstream os;
        os << "term budget exceeded (" << n << " > " << g.max_terms << ")";
        if (!g.step.empty()) os << " in step " << g.step;
        throw resource_limit(os.str());
    }
}

MultiPoly add(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    r.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        int c = mono_cmp(a.t[i].m, b.t[j].m);
        if (c > 0) {
            r.t.push_back(a.t[i++]);
        } else if (c < 0) {
            r.t.push_back(b.t[j++]);
        } else {
            Q s = a.t[i].c + b.t[j].c;
            if (s != 0) r.t.push_back({a.t[i].m, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j) r.t.push_back(b.t[j]);
    guard_terms(r.t.size());
    return r;
}

MultiPoly sub(const MultiPoly& a, const MultiPoly& b) { return add(a, neg(b)); }

MultiPoly neg(const MultiPoly& a) {
    MultiPoly r = a;
    for (auto& t : r.t) t.c = -t.c;
    return r;
}

MultiPoly scale(const MultiPoly& a, const Q& k) {
    if (k == 0) return {};
    MultiPoly r = a;
    for (auto& t : r.t) t.c *= k;
    return r;
}

MultiPoly mul_term(const MultiPoly& a, const Term& t) {
    if (t.c == 0) return {};
    MultiPoly r;
    r.t.reserve(a.t.size());
    for (const auto& at : a.t) r.t.push_back({mono_mul(at.m, t.m), at.c * t.c});
    return r;
}

namespace {
struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return mono_cmp(a, b) > 0; }
};
} // namespace

MultiPoly mul(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.t.size() == 1) return mul_term(b, a.t.front());
    if (b.t.size() == 1) return mul_term(a, b.t.front());
    const MultiPoly& small = a.t.size() <= b.t.size() ? a : b;
    const MultiPoly& big = a.t.size() <= b.t.size() ? b : a;
    std::map<Monomial, Q, MonoGreater> acc;
    for (const auto& st : small.t) {
        for (const auto& bt : big.t) {
            Monomial m = mono_mul(st.m, bt.m);
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(std::move(m), st.c * bt.c);
            } else {
                it->second += st.c * bt.c;
                if (it->second == 0) acc.erase(it);
            }
        }
        guard_terms(acc.size());
    }
    MultiPoly r;
    r.t.reserve(acc.size());
    for (auto& kv : acc) r.t.push_back({kv.first, std::move(kv.second)});
    return r;
}

MultiPoly pow_u(const MultiPoly& a, unsigned k) {
    MultiPoly r = poly_const(Q(1));
    MultiPoly base = a;
    while (k > 0) {
        if (k & 1u) r = mul(r, base);
        k >>= 1u;
        if (k > 0) base = mul(base, base);
    }
    return r;
}

MultiPoly partial_derivative(const MultiPoly& p, SymbolId x) {
    MultiPoly r;
    size_t sx = static_cast<size_t>(x);
    for (const auto& t : p.t) {
        if (sx >= t.m.e.size() || t.m.e[sx] == 0) continue;
        Term d;
        d.c = t.c * static_cast<long>(t.m.e[sx]);
        d.m = t.m;
        d.m.e[sx] -= 1;
        d.m.trim();
        r.t.push_back(std::move(d));
    }
    // Dropping one exponent preserves the relative order of surviving terms.
    return r;
}

bool try_exact_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly& quotient) {
    if (b.is_zero()) return false;
    quotient = {};
    if (a.is_zero()) return true;
    if (b.t.size() == 1) {
        const Term& d = b.t.front();
        MultiPoly q;
        q.t.reserve(a.t.size());
        for (const auto& t : a.t) {
            if (!mono_divides(d.m, t.m)) return false;
            q.t.push_back({mono_div(t.m, d.m), t.c / d.c});
        }
        quotient = std::move(q);
        return true;
    }
    std::map<Monomial, Q, MonoGreater> rem;
    for (const auto& t : a.t) rem.emplace(t.m, t.c);
    const Term& lead = b.t.front();
    std::vector<Term> q;
    while (!rem.empty()) {
        const auto& top = *rem.begin();
        if (!mono_divides(lead.m, top.first)) return false;
        Term qt{mono_div(top.first, lead.m), top.second / lead.c};
        for (const auto& bt : b.t) {
            Monomial m = mono_mul(qt.m, bt.m);
            Q delta = qt.c * bt.c;
            auto it = rem.find(m);
            if (it == rem.end()) {
                rem.emplace(std::move(m), -delta);
            } else {
                it->second -= delta;
                if (it->second == 0) rem.erase(it);
            }
        }
        q.push_back(std::move(qt));
        guard_terms(q.size());
    }
    quotient.t = std::move(q);
    return true;
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly q;
    if (b.is_zero()) throw not_divisible("division by the zero polynomial");
    if (!try_exact_divide(a, b, q)) throw not_divisible("no exact polynomial quotient");
    return q;
}

Q content(const MultiPoly& p) {
    if (p.is_zero()) return Q(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : p.t) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
    }
    Q c(num_gcd, den_lcm);
    c.canonicalize();
    if (p.t.front().c < 0) c = -c;
    return c;
}

MultiPoly normalize(const MultiPoly& p) {
    if (p.is_zero()) return p;
    Q c = content(p);
    MultiPoly r = p;
    for (auto& t : r.t) t.c /= c;
    return r;
}

uint32_t total_degree(const MultiPoly& p) {
    uint32_t d = 0;
    for (const auto& t : p.t) d = std::max(d, t.m.deg);
    return d;
}

int degree_in(const MultiPoly& p, SymbolId x) {
    int d = -1;
    for (const auto& t : p.t) d = std::max(d, static_cast<int>(t.m.exp(x)));
    return p.is_zero() ? -1 : std::max(d, 0);
}

bool contains_symbol(const MultiPoly& p, SymbolId x) {
    for (const auto& t : p.t)
        if (t.m.exp(x) > 0) return true;
    return false;
}

std::vector<SymbolId> support(const MultiPoly& p) {
    std::vector<char> seen;
    for (const auto& t : p.t) {
        if (t.m.e.size() > seen.size()) seen.resize(t.m.e.size(), 0);
        for (size_t i = 0; i < t.m.e.size(); ++i)
            if (t.m.e[i] > 0) seen[i] = 1;
    }
    std::vector<SymbolId> r;
    for (size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) r.push_back(static_cast<SymbolId>(i));
    return r;
}

std::vector<MultiPoly> as_univariate(const MultiPoly& p, SymbolId x) {
    int d = degree_in(p, x);
    std::vector<MultiPoly> coeffs(static_cast<size_t>(d < 0 ? 0 : d) + 1);
    size_t sx = static_cast<size_t>(x);
    for (const auto& t : p.t) {
        uint16_t k = t.m.exp(x);
        Term stripped;
        stripped.c = t.c;
        stripped.m = t.m;
        if (sx < stripped.m.e.size()) {
            stripped.m.e[sx] = 0;
            stripped.m.trim();
        }
        coeffs[k].t.push_back(std::move(stripped));
    }
    // Erasing one symbol keeps each bucket ordered, but re-establish the
    // invariant defensively in case of ties collapsing.
    for (auto& c : coeffs) {
        std::sort(c.t.begin(), c.t.end(),
                  [](const Term& a, const Term& b) { return mono_cmp(a.m, b.m) > 0; });
    }
    return coeffs;
}

MultiPoly from_univariate(const std::vector<MultiPoly>& coeffs, SymbolId x) {
    MultiPoly r;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        Term t{mono_of(x, static_cast<uint16_t>(k)), Q(1)};
        r = add(r, mul_term(coeffs[k], t));
    }
    return r;
}

MultiPoly coeff_in(const MultiPoly& p, SymbolId x, unsigned k) {
    auto c = as_univariate(p, x);
    if (k >= c.size()) return {};
    return c[k];
}

Q evaluate(const MultiPoly& p, const std::map<SymbolId, Q>& assignment) {
    Q total = 0;
    for (const auto& t : p.t) {
        Q v = t.c;
        for (size_t i = 0; i < t.m.e.size(); ++i) {
            if (t.m.e[i] == 0) continue;
            auto it = assignment.find(static_cast<SymbolId>(i));
            if (it == assignment.end())
                throw missing_assignment("no value for symbol id " + std::to_string(i));
            Q base = it->second;
            for (uint16_t k = 0; k < t.m.e[i]; ++k) v *= base;
        }
        total += v;
    }
    return total;
}

MultiPoly substitute(const MultiPoly& p, SymbolId x, const Q& value) {
    auto coeffs = as_univariate(p, x);
    MultiPoly r;
    Q power = 1;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) power *= value;
        r = add(r, scale(coeffs[k], power));
    }
    return r;
}

MultiPoly substitute(const MultiPoly& p, SymbolId x, const MultiPoly& value) {
    auto coeffs = as_univariate(p, x);
    // Horner evaluation in the substituted polynomial.
    MultiPoly r;
    for (size_t k = coeffs.size(); k-- > 0;) {
        r = add(mul(r, value), coeffs[k]);
    }
    return r;
}

MultiPoly substitute(const MultiPoly& p, const std::map<SymbolId, MultiPoly>& values) {
    MultiPoly r = p;
    for (const auto& kv : values) r = substitute(r, kv.first, kv.second);
    return r;
}

// ---- canonical text ----

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        char c = peek();
        if (pos < s.size()) ++pos;
        return c;
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
    std::string digits() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw parse_error("expected digits at offset " + std::to_string(pos));
        return s.substr(start, pos - start);
    }
};

struct Parser {
    Lexer lex;
    SymbolTable& table;
    bool auto_register;

    MultiPoly parse_expr() {
        MultiPoly r;
        bool negate = false;
        char c = lex.peek();
        if (c == '+' || c == '-') {
            lex.take();
            negate = c == '-';
        }
        r = parse_product();
        if (negate) r = neg(r);
        while (true) {
            c = lex.peek();
            if (c != '+' && c != '-') break;
            lex.take();
            MultiPoly t = parse_product();
            r = c == '+' ? add(r, t) : sub(r, t);
        }
        return r;
    }

    MultiPoly parse_product() {
        MultiPoly r = parse_power();
        while (lex.peek() == '*') {
            lex.take();
            r = mul(r, parse_power());
        }
        return r;
    }

    MultiPoly parse_power() {
        MultiPoly base = parse_atom();
        if (lex.peek() == '^') {
            lex.take();
            unsigned long k = std::stoul(lex.digits());
            if (k > 0xffff) throw parse_error("exponent too large");
            return pow_u(base, static_cast<unsigned>(k));
        }
        return base;
    }

    MultiPoly parse_atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.take();
            MultiPoly e = parse_expr();
            if (lex.take() != ')') throw parse_error("missing closing parenthesis");
            return e;
        }
        if (c == '-') { // unary minus inside a product, e.g. 2*-3 is rejected, (-3) handled above
            throw parse_error("unexpected '-' inside term");
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lex.digits();
            if (lex.peek() == '/') {
                lex.take();
                std::string den = lex.digits();
                return poly_const(parse_q(num + "/" + den));
            }
            return poly_const(parse_q(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = lex.ident();
            SymbolId s = auto_register ? table.register_symbol(name) : table.id(name);
            if (s < 0) throw parse_error("unknown symbol: " + name);
            return poly_symbol(s);
        }
        throw parse_error(std::string("unexpected character '") + c + "' at offset " +
                          std::to_string(lex.pos));
    }
};

} // namespace

MultiPoly parse_poly(const std::string& text, SymbolTable& table, bool auto_register) {
    Parser p{Lexer{text}, table, auto_register};
    MultiPoly r = p.parse_expr();
    if (p.lex.peek() != '\0')
        throw parse_error("trailing input at offset " + std::to_string(p.lex.pos));
    return r;
}

std::string to_text(const MultiPoly& p, const SymbolTable& table) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.t) {
        Q c = t.c;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool printed_coeff = false;
        if (t.m.is_unit() || c != 1) {
            os << q_text(c);
            printed_coeff = true;
        }
        bool first_factor = !printed_coeff;
        for (size_t i = 0; i < t.m.e.size(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (!first_factor) os << "*";
            first_factor = false;
            os << table.name(static_cast<SymbolId>(i));
            if (t.m.e[i] > 1) os << "^" << t.m.e[i];
        }
    }
    return os.str();
}

} // namespace cmc
