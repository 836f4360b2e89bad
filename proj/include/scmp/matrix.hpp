#pragma once

#include <cassert>
#include <vector>

#include "scmp/rational.hpp"

namespace scmp {

using Vec = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> data;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    Rational& operator()(int r, int c) {
        assert(r >= 0 && r < rows && c >= 0 && c < cols);
        return data[static_cast<size_t>(r) * cols + c];
    }
    const Rational& operator()(int r, int c) const {
        assert(r >= 0 && r < rows && c >= 0 && c < cols);
        return data[static_cast<size_t>(r) * cols + c];
    }

    Vec row(int r) const {
        Vec out(cols);
        for (int c = 0; c < cols; ++c) out[c] = (*this)(r, c);
        return out;
    }

    bool operator==(const Mat& other) const = default;

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
};

inline Vec mat_vec(const Mat& m, const Vec& x) {
    assert(static_cast<int>(x.size()) == m.cols);
    Vec out(m.rows, Rational(0));
    for (int r = 0; r < m.rows; ++r) {
        Rational acc = 0;
        for (int c = 0; c < m.cols; ++c) acc += m(r, c) * x[c];
        out[r] = acc;
    }
    return out;
}

inline Rational dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Rational acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

/// Result of reducing the system M x = rhs to row echelon form.
struct RrefSystem {
    Mat m;                   // reduced matrix
    Vec rhs;                 // reduced right-hand side
    std::vector<int> pivot_col;  // pivot column of each of the first `rank` rows
    int rank = 0;
    bool consistent = true;  // false iff a zero row has nonzero rhs
};

/// Gauss-Jordan elimination with exact arithmetic.
RrefSystem rref_system(const Mat& m, const Vec& rhs);

/// Rank of a matrix over the rationals.
int matrix_rank(const Mat& m);

/// Affine parametrization of the solution set {x : M x = rhs}:
/// x = particular + basis * t with t free of dimension basis.cols.
struct AffineSubspace {
    Vec particular;  // one exact solution
    Mat basis;       // n x k, columns span the kernel of M
};

/// Throws EmptyPolytope if the system is inconsistent.
AffineSubspace solve_affine(const Mat& m, const Vec& rhs);

}  // namespace scmp
