#include "jacsym/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace jacsym {

namespace {

// Sparse row combine: a - factor * b, columns stay sorted.
SparseRow axpy(const SparseRow& a, const Scalar& factor, const SparseRow& b) {
    SparseRow out;
    out.entries.reserve(a.entries.size() + b.entries.size());
    std::size_t i = 0, j = 0;
    while (i < a.entries.size() || j < b.entries.size()) {
        if (j == b.entries.size() ||
            (i < a.entries.size() && a.entries[i].first < b.entries[j].first)) {
            out.entries.push_back(a.entries[i++]);
        } else if (i == a.entries.size() || b.entries[j].first < a.entries[i].first) {
            out.entries.emplace_back(b.entries[j].first, -(factor * b.entries[j].second));
            ++j;
        } else {
            Scalar v = a.entries[i].second - factor * b.entries[j].second;
            if (!v.is_zero()) out.entries.emplace_back(a.entries[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

NullspaceResult nullspace(int unknowns, const std::vector<SparseRow>& rows) {
    // pivot column -> fully reduced row with leading coefficient 1
    std::map<int, SparseRow> pivots;

    for (const SparseRow& raw : rows) {
        SparseRow row = raw;
        // Sweep every pivot column out of the incoming row. Eliminating a
        // column only introduces larger ones, so the left-to-right scan ends.
        for (;;) {
            auto hit = std::find_if(row.entries.begin(), row.entries.end(), [&](const auto& e) {
                return pivots.count(e.first) > 0;
            });
            if (hit == row.entries.end()) break;
            row = axpy(row, hit->second, pivots.at(hit->first));
        }
        if (row.entries.empty()) continue;
        // Normalize and install as a new pivot.
        Scalar lead = row.entries.front().second;
        for (auto& [c, v] : row.entries) v = v / lead;
        int col = row.entries.front().first;
        // Jordan step: clear this column from all existing pivot rows.
        for (auto& [pc, prow] : pivots) {
            auto hit = std::find_if(prow.entries.begin(), prow.entries.end(),
                                    [&](const auto& e) { return e.first == col; });
            if (hit != prow.entries.end()) prow = axpy(prow, hit->second, row);
        }
        pivots.emplace(col, std::move(row));
    }

    NullspaceResult res;
    res.unknowns = unknowns;
    res.rank = static_cast<int>(pivots.size());
    std::vector<bool> is_pivot(unknowns, false);
    for (const auto& [c, r] : pivots) is_pivot.at(c) = true;
    for (int f = 0; f < unknowns; ++f) {
        if (is_pivot[f]) continue;
        ScalarVector v(unknowns, Scalar(0));
        v[f] = Scalar(1);
        for (const auto& [pc, prow] : pivots) {
            for (const auto& [c, coeff] : prow.entries) {
                if (c == f) v[pc] = -coeff;
            }
        }
        res.basis.push_back(std::move(v));
    }
    return res;
}

ScalarMatrix inverse(const ScalarMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse needs a square matrix");
    int n = m.rows();
    // Gauss-Jordan on [M | I].
    std::vector<ScalarVector> w(n, ScalarVector(2 * n, Scalar(0)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) w[r][c] = m.at(r, c);
        w[r][n + r] = Scalar(1);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!w[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("singular matrix has no inverse");
        std::swap(w[col], w[pivot]);
        Scalar inv_p = w[col][col].inv();
        for (int c = 0; c < 2 * n; ++c) w[col][c] = w[col][c] * inv_p;
        for (int r = 0; r < n; ++r) {
            if (r == col || w[r][col].is_zero()) continue;
            Scalar f = w[r][col];
            for (int c = 0; c < 2 * n; ++c) w[r][c] = w[r][c] - f * w[col][c];
        }
    }
    ScalarMatrix out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out.set(r, c, w[r][n + c]);
    return out;
}

Scalar determinant(const ScalarMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant needs a square matrix");
    int n = m.rows();
    std::vector<ScalarVector> w(n, ScalarVector(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) w[r][c] = m.at(r, c);
    Scalar det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!w[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Scalar(0);
        if (pivot != col) {
            std::swap(w[col], w[pivot]);
            det = -det;
        }
        det = det * w[col][col];
        Scalar inv_p = w[col][col].inv();
        for (int r = col + 1; r < n; ++r) {
            if (w[r][col].is_zero()) continue;
            Scalar f = w[r][col] * inv_p;
            for (int c = col; c < n; ++c) w[r][c] = w[r][c] - f * w[col][c];
        }
    }
    return det;
}

namespace {

Poly det_bareiss(const PolyMatrix& m) {
    int n = m.rows();
    std::vector<std::vector<Poly>> w;
    w.reserve(n);
    for (int r = 0; r < n; ++r) {
        std::vector<Poly> row;
        row.reserve(n);
        for (int c = 0; c < n; ++c) row.push_back(m.at(r, c));
        w.push_back(std::move(row));
    }
    Poly prev = Poly::constant(m.arity(), Scalar(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!w[r][k].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Poly::zero(m.arity());
        if (pivot != k) {
            std::swap(w[k], w[pivot]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                Poly num = w[k][k] * w[r][c] - w[r][k] * w[k][c];
                w[r][c] = divexact(num, prev);
            }
            w[r][k] = Poly::zero(m.arity());
        }
        prev = w[k][k];
    }
    Poly det = w[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// Laplace expansion over column subsets, memoized: entry for mask S is the
// determinant of the lower-right square using rows n-|S|..n-1 and columns S.
Poly det_laplace(const PolyMatrix& m) {
    int n = m.rows();
    std::map<std::uint64_t, Poly> memo;
    memo.emplace(0, Poly::constant(m.arity(), Scalar(1)));

    std::vector<std::uint64_t> masks;
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        return __builtin_popcountll(a) < __builtin_popcountll(b);
    });
    for (std::uint64_t mask : masks) {
        int size = __builtin_popcountll(mask);
        int row = n - size;
        Poly acc = Poly::zero(m.arity());
        int sign = 1;
        for (int c = 0, seen = 0; c < n; ++c) {
            if (!(mask & (1ull << c))) continue;
            const Poly& e = m.at(row, c);
            if (!e.is_zero()) {
                Poly sub = memo.at(mask & ~(1ull << c));
                Poly term = e * sub;
                acc += (sign > 0) ? term : -term;
            }
            sign = -sign;
            ++seen;
        }
        memo.emplace(mask, std::move(acc));
    }
    return memo.at((1ull << n) - 1);
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant needs a square matrix");
    if (m.rows() <= 6) return det_bareiss(m);
    return det_laplace(m);
}

int rank(const PolyMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Poly>> w;
    w.reserve(rows);
    for (int r = 0; r < rows; ++r) {
        std::vector<Poly> row;
        row.reserve(cols);
        for (int c = 0; c < cols; ++c) row.push_back(m.at(r, c));
        w.push_back(std::move(row));
    }
    Poly prev = Poly::constant(m.arity(), Scalar(1));
    int rk = 0, row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int r = row; r < rows; ++r)
            if (!w[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(w[row], w[pivot]);
        for (int r = row + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                Poly num = w[row][col] * w[r][c] - w[r][col] * w[row][c];
                w[r][c] = divexact(num, prev);
            }
            w[r][col] = Poly::zero(m.arity());
        }
        prev = w[row][col];
        ++rk;
        ++row;
    }
    return rk;
}

bool row_in_row_space(const PolyMatrix& m, const ScalarVector& v) {
    if (static_cast<int>(v.size()) != m.cols())
        throw std::invalid_argument("row length does not match column count");
    PolyMatrix ext(m.rows() + 1, m.cols(), m.arity());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) ext.set(r, c, m.at(r, c));
    for (int c = 0; c < m.cols(); ++c) ext.set(m.rows(), c, Poly::constant(m.arity(), v[c]));
    return rank(ext) == rank(m);
}

}  // namespace jacsym
