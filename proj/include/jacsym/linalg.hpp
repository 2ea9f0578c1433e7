#pragma once

#include "jacsym/polymap.hpp"

#include <vector>

namespace jacsym {

/// Sparse linear equation sum(coeff * unknown) = 0 over the tower field.
struct SparseRow {
    std::vector<std::pair<int, Scalar>> entries;  // (column, coefficient), column-sorted
};

struct NullspaceResult {
    int unknowns;
    int rank;
    /// Each basis vector is dense, length `unknowns`; reduced echelon basis.
    std::vector<ScalarVector> basis;
};

/// Exact nullspace of a homogeneous sparse system by Gauss-Jordan elimination.
NullspaceResult nullspace(int unknowns, const std::vector<SparseRow>& rows);

/// Exact inverse; throws std::domain_error when singular.
ScalarMatrix inverse(const ScalarMatrix& m);

Scalar determinant(const ScalarMatrix& m);

/// Determinant of a polynomial matrix: fraction-free Bareiss elimination for
/// sizes up to 6, Laplace expansion with memoization beyond.
Poly determinant(const PolyMatrix& m);

/// Rank over the rational function field, by fraction-free elimination.
int rank(const PolyMatrix& m);

/// Whether the constant row vector v lies in the row space of m over K(x).
bool row_in_row_space(const PolyMatrix& m, const ScalarVector& v);

}  // namespace jacsym
