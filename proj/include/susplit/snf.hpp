#pragma once

// Smith normal form over the integers. Pivot rule: nonzero entry of minimal
// absolute value, ties broken by lowest row then lowest column. The rule only
// limits coefficient growth; correctness never depends on it.

#include <cstdlib>
#include <vector>

#include "susplit/core.hpp"

namespace susplit {

struct SmithNormalForm {
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix d;  // diagonal, d1 | d2 | ...
    IntMatrix v;  // unimodular, cols x cols
};

namespace detail {

// Diagonalizes a in place. When u/v are non-null they accumulate the row and
// column operations so that u * a_original * v = diagonal.
inline void snf_reduce(IntMatrix& a, IntMatrix* u, IntMatrix* v) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pivot search over the trailing submatrix
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                const Int& x = a(i, j);
                if (x == 0) continue;
                Int ax = abs(x);
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;  // submatrix is zero

        a.swap_rows(t, pi);
        if (u) u->swap_rows(t, pi);
        a.swap_cols(t, pj);
        if (v) v->swap_cols(t, pj);

        // clear row t and column t; each pass leaves remainders strictly
        // smaller than the pivot, so this terminates
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                a.row_submul(i, t, q);
                if (u) u->row_submul(i, t, q);
                if (a(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                a.col_submul(j, t, q);
                if (v) v->col_submul(j, t, q);
                if (a(t, j) != 0) dirty = true;
            }
            if (!dirty) break;
            // a remainder survived; re-pick the smallest entry in row/col t
            std::size_t bi = t, bj = t;
            Int bbest = abs(a(t, t));
            for (std::size_t i = t + 1; i < rows; ++i)
                if (a(i, t) != 0 && abs(a(i, t)) < bbest) {
                    bbest = abs(a(i, t));
                    bi = i;
                    bj = t;
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (a(t, j) != 0 && abs(a(t, j)) < bbest) {
                    bbest = abs(a(t, j));
                    bi = t;
                    bj = j;
                }
            if (bi != t) {
                a.swap_rows(t, bi);
                if (u) u->swap_rows(t, bi);
            } else if (bj != t) {
                a.swap_cols(t, bj);
                if (v) v->swap_cols(t, bj);
            }
        }

        // enforce divisibility into the rest of the submatrix
        bool redo = false;
        for (std::size_t i = t + 1; i < rows && !redo; ++i)
            for (std::size_t j = t + 1; j < cols; ++j)
                if (a(i, j) % a(t, t) != 0) {
                    // fold row i into row t and re-run the clearing loop
                    a.row_submul(t, i, Int(-1));
                    if (u) u->row_submul(t, i, Int(-1));
                    redo = true;
                    break;
                }
        if (redo) continue;  // same t

        if (a(t, t) < 0) {
            a.negate_row(t);
            if (u) u->negate_row(t);
        }
        ++t;
    }
}

}  // namespace detail

inline SmithNormalForm smith_normal_form(IntMatrix m) {
    SmithNormalForm r;
    r.u = IntMatrix::identity(m.rows());
    r.v = IntMatrix::identity(m.cols());
    detail::snf_reduce(m, &r.u, &r.v);
    r.d = std::move(m);
    return r;
}

// Nonzero diagonal entries of the Smith form, in divisibility order.
inline std::vector<Int> elementary_divisors(IntMatrix m) {
    detail::snf_reduce(m, nullptr, nullptr);
    std::vector<Int> out;
    for (std::size_t t = 0; t < m.rows() && t < m.cols(); ++t) {
        if (m(t, t) == 0) break;
        out.push_back(m(t, t));
    }
    return out;
}

inline std::size_t matrix_rank(IntMatrix m) { return elementary_divisors(std::move(m)).size(); }

}  // namespace susplit
