#include "scmp/matrix.hpp"

#include "scmp/errors.hpp"

namespace scmp {

RrefSystem rref_system(const Mat& m, const Vec& rhs) {
    assert(rhs.empty() || static_cast<int>(rhs.size()) == m.rows);
    RrefSystem out;
    out.m = m;
    out.rhs = rhs.empty() ? Vec(m.rows, Rational(0)) : rhs;

    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows; ++r) {
            if (out.m(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int c = 0; c < m.cols; ++c) std::swap(out.m(pivot, c), out.m(row, c));
            std::swap(out.rhs[pivot], out.rhs[row]);
        }
        Rational inv = 1 / out.m(row, col);
        for (int c = col; c < m.cols; ++c) out.m(row, c) *= inv;
        out.rhs[row] *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || out.m(r, col) == 0) continue;
            Rational factor = out.m(r, col);
            for (int c = col; c < m.cols; ++c) out.m(r, c) -= factor * out.m(row, c);
            out.rhs[r] -= factor * out.rhs[row];
        }
        out.pivot_col.push_back(col);
        ++row;
    }
    out.rank = row;
    for (int r = out.rank; r < m.rows; ++r) {
        if (out.rhs[r] != 0) {
            out.consistent = false;
            break;
        }
    }
    return out;
}

int matrix_rank(const Mat& m) { return rref_system(m, Vec()).rank; }

AffineSubspace solve_affine(const Mat& m, const Vec& rhs) {
    RrefSystem red = rref_system(m, rhs);
    if (!red.consistent) throw EmptyPolytope("equality constraints are inconsistent");

    std::vector<bool> is_pivot(m.cols, false);
    for (int c : red.pivot_col) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    AffineSubspace out;
    out.particular.assign(m.cols, Rational(0));
    for (int r = 0; r < red.rank; ++r) out.particular[red.pivot_col[r]] = red.rhs[r];

    out.basis = Mat(m.cols, static_cast<int>(free_cols.size()));
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
        int fc = free_cols[k];
        out.basis(fc, k) = 1;
        for (int r = 0; r < red.rank; ++r) out.basis(red.pivot_col[r], k) = -red.m(r, fc);
    }
    return out;
}

}  // namespace scmp
