#include "cmc/oracle.hpp"

#include "cmc/elimination.hpp"
#include "cmc/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cmc {

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

long SplitMix64::uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

Q sample_q(SplitMix64& rng, long bound) {
    long num = rng.uniform(-bound, bound);
    long den = rng.uniform(1, bound);
    return make_q(num, den);
}

namespace {

std::set<SymbolId> joint_support(const std::vector<const MultiPoly*>& ps) {
    std::set<SymbolId> vars;
    for (const MultiPoly* p : ps)
        for (SymbolId s : support(*p))
            vars.insert(s);
    return vars;
}

bool avoid_ok(const std::vector<MultiPoly>& avoid, const std::map<SymbolId, Q>& point) {
    for (const MultiPoly& a : avoid) {
        bool covered = true;
        for (SymbolId s : support(a))
            if (!point.count(s)) { covered = false; break; }
        if (covered && evaluate(a, point) == 0)
            return false;
    }
    return true;
}

constexpr int kInnerRetries = 32;

} // namespace

ZeroTestResult zero_test(const MultiPoly& e, const SamplePlan& plan,
                         const std::vector<MultiPoly>& avoid) {
    ZeroTestResult res;
    if (e.is_zero())
        return res;

    std::vector<const MultiPoly*> ps{&e};
    for (const MultiPoly& a : avoid)
        ps.push_back(&a);
    std::set<SymbolId> vars = joint_support(ps);

    SplitMix64 rng(plan.seed);
    for (int trial = 0; trial < plan.trials; ++trial) {
        std::map<SymbolId, Q> point;
        bool admissible = false;
        for (int k = 0; k < kInnerRetries && !admissible; ++k) {
            point.clear();
            for (SymbolId s : vars)
                point[s] = sample_q(rng, plan.bound);
            admissible = avoid_ok(avoid, point);
        }
        if (!admissible)
            continue;
        Q v = evaluate(e, point);
        if (v != 0) {
            res.proved_nonzero = true;
            res.witness = PointWitness{point, v, trial};
            return res;
        }
    }
    return res;
}

ZeroTestResult zero_test(const RationalExpr& e, const SamplePlan& plan,
                         const std::vector<MultiPoly>& avoid) {
    std::vector<MultiPoly> avoid2 = avoid;
    for (const auto& [den, exp] : e.den)
        avoid2.push_back(den);
    return zero_test(e.num, plan, avoid2);
}

namespace {

std::vector<Q> rational_coeffs(const MultiPoly& f, SymbolId x) {
    std::vector<Q> out;
    for (const MultiPoly& c : as_univariate(f, x)) {
        if (!c.is_constant())
            throw cas_error("gcd oracle requires univariate input");
        out.push_back(c.is_zero() ? Q(0) : c.t[0].c);
    }
    while (out.size() > 1 && out.back() == 0)
        out.pop_back();
    return out;
}

// degree of a dense coefficient vector (constant 0 has degree 0 here)
size_t vdeg(const std::vector<Q>& v) { return v.size() - 1; }

bool vzero(const std::vector<Q>& v) {
    for (const Q& c : v)
        if (c != 0) return false;
    return true;
}

std::vector<Q> vrem(std::vector<Q> a, const std::vector<Q>& b) {
    while (!vzero(a) && vdeg(a) >= vdeg(b)) {
        Q k = a.back() / b.back();
        size_t shift = vdeg(a) - vdeg(b);
        for (size_t i = 0; i < b.size(); ++i)
            a[i + shift] -= k * b[i];
        while (a.size() > 1 && a.back() == 0)
            a.pop_back();
        if (a.size() == 1 && a[0] == 0)
            break;
    }
    return a;
}

} // namespace

bool gcd_oracle(const MultiPoly& f, const MultiPoly& g, SymbolId x) {
    std::vector<Q> a = rational_coeffs(f, x), b = rational_coeffs(g, x);
    if (vzero(a) && vzero(b))
        return true; // everything divides zero
    if (vzero(a))
        return vdeg(b) >= 1;
    if (vzero(b))
        return vdeg(a) >= 1;
    if (vdeg(a) < vdeg(b))
        std::swap(a, b);
    while (true) {
        if (vzero(b))
            return vdeg(a) >= 1;
        if (vdeg(b) == 0)
            return false; // unit gcd
        std::vector<Q> r = vrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
}

namespace {

MultiPoly specialize(const MultiPoly& p, const std::map<SymbolId, Q>& point) {
    MultiPoly out = p;
    for (const auto& [s, v] : point)
        if (contains_symbol(out, s))
            out = substitute(out, s, v);
    return out;
}

} // namespace

PointWitness specialization_witness(const std::vector<ChainStage>& tower,
                                    SymbolId survivor, const SamplePlan& plan,
                                    const std::vector<MultiPoly>& avoid,
                                    const SymbolTable& table) {
    if (tower.empty())
        throw cas_error("empty elimination tower");
    for (const ChainStage& st : tower) {
        if ((!st.f_is_prev && st.f.is_zero()) || st.g.is_zero())
            throw identically_zero("tower input is the zero polynomial");
    }

    // Variables to sample: everything except the survivor and the variables
    // the tower eliminates.
    std::set<SymbolId> skip{survivor};
    for (const ChainStage& st : tower)
        skip.insert(st.eliminated);
    std::vector<const MultiPoly*> ps;
    for (const ChainStage& st : tower) {
        if (!st.f_is_prev)
            ps.push_back(&st.f);
        ps.push_back(&st.g);
    }
    for (const MultiPoly& a : avoid)
        ps.push_back(&a);
    std::set<SymbolId> vars;
    for (SymbolId s : joint_support(ps))
        if (!skip.count(s))
            vars.insert(s);

    SplitMix64 rng(plan.seed);
    int degenerate = 0, lc_dropped = 0;

    for (int trial = 0; trial < plan.trials; ++trial) {
        std::map<SymbolId, Q> point;
        bool admissible = false;
        for (int k = 0; k < kInnerRetries && !admissible; ++k) {
            point.clear();
            for (SymbolId s : vars)
                point[s] = sample_q(rng, plan.bound);
            admissible = avoid_ok(avoid, point);
        }
        if (!admissible)
            continue;

        MultiPoly prev;
        bool bad = false;
        MultiPoly last_f, last_g; // specialized inputs of the final stage
        for (size_t i = 0; i < tower.size(); ++i) {
            const ChainStage& st = tower[i];
            MultiPoly f = st.f_is_prev ? prev : specialize(st.f, point);
            MultiPoly g = specialize(st.g, point);
            // degree drop would change the Sylvester matrix shape
            if (!st.f_is_prev &&
                degree_in(f, st.eliminated) != degree_in(st.f, st.eliminated)) {
                ++lc_dropped; bad = true; break;
            }
            if (degree_in(g, st.eliminated) != degree_in(st.g, st.eliminated)) {
                ++lc_dropped; bad = true; break;
            }
            if (f.is_zero() || g.is_zero() ||
                degree_in(f, st.eliminated) < 1 || degree_in(g, st.eliminated) < 1) {
                ++degenerate; bad = true; break;
            }
            if (i + 1 == tower.size()) { last_f = f; last_g = g; }
            prev = resultant(f, g, st.eliminated);
        }
        if (bad)
            continue;
        if (prev.is_zero()) {
            ++degenerate;
            continue;
        }
        for (SymbolId s : support(prev))
            if (s != survivor)
                throw cas_error(std::string("tower head still involves ") + table.name(s));

        const ChainStage& last = tower.back();
        for (int k = 0; k < kInnerRetries; ++k) {
            Q a = sample_q(rng, plan.bound);
            std::map<SymbolId, Q> full = point;
            full[survivor] = a;
            if (!avoid_ok(avoid, full))
                continue;
            // keep the final matrix shape intact at the sampled survivor value
            MultiPoly fa = contains_symbol(last_f, survivor) ? substitute(last_f, survivor, a) : last_f;
            MultiPoly ga = contains_symbol(last_g, survivor) ? substitute(last_g, survivor, a) : last_g;
            if (degree_in(fa, last.eliminated) != degree_in(last_f, last.eliminated) ||
                degree_in(ga, last.eliminated) != degree_in(last_g, last.eliminated))
                continue;
            Q v = evaluate(prev, full);
            if (v == 0)
                continue;
            // cross-check: the numeric Sylvester determinant of the fully
            // evaluated final pair must reproduce the same value
            int m = degree_in(fa, last.eliminated), n = degree_in(ga, last.eliminated);
            std::vector<std::vector<Q>> mat(m + n, std::vector<Q>(m + n, Q(0)));
            for (int row = 0; row < n; ++row)
                for (int k2 = 0; k2 <= m; ++k2)
                    mat[row][row + k2] = evaluate(coeff_in(fa, last.eliminated, m - k2), full);
            for (int row = 0; row < m; ++row)
                for (int k2 = 0; k2 <= n; ++k2)
                    mat[n + row][row + k2] = evaluate(coeff_in(ga, last.eliminated, n - k2), full);
            Q det = determinant_numeric(mat);
            if (det != v)
                throw cas_error("specialized determinant disagrees with eliminant value");
            return PointWitness{full, v, trial};
        }
    }

    std::ostringstream msg;
    msg << "no nonvanishing witness in " << plan.trials << " trials";
    if (degenerate > 0)
        msg << " (" << degenerate << " specializations vanished identically - "
            << "consistent with a zero eliminant)";
    if (lc_dropped > 0)
        msg << " (" << lc_dropped << " samples dropped a leading coefficient)";
    throw exhausted_trials(msg.str());
}

} // namespace cmc
