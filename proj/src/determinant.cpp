#include "cmc/determinant.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cmc {

PolyMatrix make_matrix(size_t n) {
    PolyMatrix m;
    m.n = n;
    m.a.assign(n * n, MultiPoly{});
    return m;
}

MultiPoly determinant_cofactor(const PolyMatrix& m) {
    if (m.n == 0) return poly_const(Q(1));
    if (m.n == 1) return m.at(0, 0);
    if (m.n == 2) return sub(mul(m.at(0, 0), m.at(1, 1)), mul(m.at(0, 1), m.at(1, 0)));
    MultiPoly det;
    for (size_t j = 0; j < m.n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix minor = make_matrix(m.n - 1);
        for (size_t i = 1; i < m.n; ++i) {
            size_t cj = 0;
            for (size_t k = 0; k < m.n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, cj++) = m.at(i, k);
            }
        }
        MultiPoly term = mul(m.at(0, j), determinant_cofactor(minor));
        det = (j % 2 == 0) ? add(det, term) : sub(det, term);
    }
    return det;
}

MultiPoly determinant_bareiss(const PolyMatrix& input, bool parallel) {
    size_t n = input.n;
#ifndef _OPENMP
    (void)parallel;
#endif
    if (n == 0) return poly_const(Q(1));
    PolyMatrix m = input;
    int sign = 1;
    MultiPoly prev = poly_const(Q(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return {};
        if (pivot != k) {
            for (size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        const long long rows = static_cast<long long>(n - k - 1);
        const long long cols = rows;
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(dynamic) if (parallel && rows > 1)
#endif
        for (long long di = 0; di < rows; ++di) {
            for (long long dj = 0; dj < cols; ++dj) {
                size_t i = k + 1 + static_cast<size_t>(di);
                size_t j = k + 1 + static_cast<size_t>(dj);
                MultiPoly numer =
                    sub(mul(m.at(k, k), m.at(i, j)), mul(m.at(i, k), m.at(k, j)));
                m.at(i, j) = exact_divide(numer, prev);
            }
        }
        prev = m.at(k, k);
    }
    MultiPoly det = m.at(n - 1, n - 1);
    return sign < 0 ? neg(det) : det;
}

Q determinant_numeric(std::vector<std::vector<Q>> m) {
    size_t n = m.size();
    Q det = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return Q(0);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Q f = m[i][k] / m[k][k];
            for (size_t j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

namespace {

Q interp_node(size_t k) {
    // 0, 1, -1, 2, -2, ...
    long v = static_cast<long>((k + 1) / 2);
    return Q(k % 2 == 1 ? v : -v);
}

MultiPoly interpolate_rec(const PolyMatrix& m, const std::vector<SymbolId>& vars,
                          size_t depth) {
    if (depth == vars.size()) {
        bool constant = true;
        for (const auto& e : m.a)
            if (!e.is_zero() && !e.is_constant()) { constant = false; break; }
        if (!constant) return determinant_bareiss(m, false); // leftover symbols: exact fallback
        std::vector<std::vector<Q>> num(m.n, std::vector<Q>(m.n, Q(0)));
        for (size_t i = 0; i < m.n; ++i)
            for (size_t j = 0; j < m.n; ++j) {
                const MultiPoly& e = m.at(i, j);
                if (!e.is_zero()) num[i][j] = e.leading().c;
            }
        return poly_const(determinant_numeric(std::move(num)));
    }
    SymbolId x = vars[depth];
    // Row-sum degree bound on deg_x(det).
    size_t bound = 0;
    for (size_t i = 0; i < m.n; ++i) {
        int row = 0;
        for (size_t j = 0; j < m.n; ++j) row = std::max(row, degree_in(m.at(i, j), x));
        bound += static_cast<size_t>(std::max(row, 0));
    }
    size_t count = bound + 1;
    std::vector<Q> nodes(count);
    std::vector<MultiPoly> dd(count);
    for (size_t k = 0; k < count; ++k) {
        nodes[k] = interp_node(k);
        PolyMatrix sub_m = make_matrix(m.n);
        for (size_t e = 0; e < m.a.size(); ++e) sub_m.a[e] = substitute(m.a[e], x, nodes[k]);
        dd[k] = interpolate_rec(sub_m, vars, depth + 1);
    }
    // Newton divided differences, then Horner expansion in x.
    for (size_t level = 1; level < count; ++level)
        for (size_t k = count - 1; k >= level; --k) {
            Q denom = nodes[k] - nodes[k - level];
            dd[k] = scale(sub(dd[k], dd[k - 1]), 1 / denom);
            if (k == level) break;
        }
    MultiPoly result = dd[count - 1];
    for (size_t k = count - 1; k-- > 0;) {
        MultiPoly lin = sub(poly_symbol(x), poly_const(nodes[k]));
        result = add(mul(result, lin), dd[k]);
    }
    return result;
}

} // namespace

MultiPoly determinant_interpolate(const PolyMatrix& m, const std::vector<SymbolId>& vars) {
    return interpolate_rec(m, vars, 0);
}

MultiPoly determinant(const PolyMatrix& m, DetStrategy s) {
    switch (s) {
    case DetStrategy::Cofactor:
        return determinant_cofactor(m);
    case DetStrategy::Bareiss:
        return determinant_bareiss(m, false);
    case DetStrategy::BareissParallel:
        return determinant_bareiss(m, true);
    case DetStrategy::Interpolate: {
        std::vector<SymbolId> vars;
        for (const auto& e : m.a)
            for (SymbolId x : support(e))
                if (std::find(vars.begin(), vars.end(), x) == vars.end()) vars.push_back(x);
        std::sort(vars.begin(), vars.end());
        return determinant_interpolate(m, vars);
    }
    case DetStrategy::Auto:
    default:
        return m.n <= 3 ? determinant_cofactor(m) : determinant_bareiss(m, false);
    }
}

} // namespace cmc
