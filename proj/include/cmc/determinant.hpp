#pragma once

#include "cmc/poly.hpp"

namespace cmc {

struct PolyMatrix {
    size_t n = 0; // square, row-major
    std::vector<MultiPoly> a;

    MultiPoly& at(size_t i, size_t j) { return a[i * n + j]; }
    const MultiPoly& at(size_t i, size_t j) const { return a[i * n + j]; }
};

PolyMatrix make_matrix(size_t n);

enum class DetStrategy {
    Auto,             // cofactor for n <= 4, Bareiss otherwise
    Cofactor,         // naive expansion, the oracle
    Bareiss,          // fraction-free elimination, serial
    BareissParallel,  // same elimination with parallel row updates
    Interpolate,      // evaluation-interpolation over selected variables
};

MultiPoly determinant(const PolyMatrix& m, DetStrategy s = DetStrategy::Auto);

MultiPoly determinant_cofactor(const PolyMatrix& m);
MultiPoly determinant_bareiss(const PolyMatrix& m, bool parallel);

// Evaluate the matrix at interpolation nodes of `vars` (innermost matrices
// are constant and fall to exact rational elimination), then rebuild the
// determinant by Newton interpolation. Identical to the direct result.
MultiPoly determinant_interpolate(const PolyMatrix& m, const std::vector<SymbolId>& vars);

Q determinant_numeric(std::vector<std::vector<Q>> m);

} // namespace cmc
