#include "lfforge/rational_linalg.hpp"

#include <cstddef>

#include "lfforge/errors.hpp"

namespace lfforge {

RatMat nullspace(const RatMat& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    RatMat a = m;

    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        const Rational inv = Rational(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    RatMat basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        RatVec v(cols);
        v[fc] = Rational(1);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

long long symmetric_signature(RatMat s) {
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (s[i].size() != n) throw Error("symmetric_signature: matrix is not square");
        for (std::size_t j = i + 1; j < n; ++j)
            if (s[i][j] != s[j][i]) throw Error("symmetric_signature: matrix is not symmetric");
    }

    long long pos = 0, neg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (s[i][i].is_zero()) {
            // Prefer a later nonzero diagonal entry; otherwise manufacture
            // one from an off-diagonal s[i][j] (the congruence row_i += row_j,
            // col_i += col_j puts 2*s[i][j] on the diagonal).
            std::size_t swap_row = n;
            for (std::size_t j = i + 1; j < n; ++j)
                if (!s[j][j].is_zero()) {
                    swap_row = j;
                    break;
                }
            if (swap_row < n) {
                std::swap(s[i], s[swap_row]);
                for (std::size_t k = 0; k < n; ++k) std::swap(s[k][i], s[k][swap_row]);
            } else {
                std::size_t off = n;
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!s[i][j].is_zero()) {
                        off = j;
                        break;
                    }
                if (off == n) continue;  // row i is zero from column i on
                for (std::size_t k = 0; k < n; ++k) s[i][k] += s[off][k];
                for (std::size_t k = 0; k < n; ++k) s[k][i] += s[k][off];
            }
        }
        const Rational pivot = s[i][i];
        if (pivot.is_zero()) continue;
        if (pivot.sign() > 0)
            ++pos;
        else
            ++neg;
        for (std::size_t r = i + 1; r < n; ++r) {
            if (s[r][i].is_zero()) continue;
            const Rational f = s[r][i] / pivot;
            for (std::size_t k = 0; k < n; ++k) s[r][k] -= f * s[i][k];
            for (std::size_t k = 0; k < n; ++k) s[k][r] -= f * s[k][i];
        }
    }
    return pos - neg;
}

}  // namespace lfforge
