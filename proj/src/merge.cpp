#include "scmp/merge.hpp"

#include "scmp/errors.hpp"

namespace scmp {

UnaryResponse project_binary(const BinaryResponse& h, Axis fixed_variable, int value) {
    int out0, out1;
    if (fixed_variable == Axis::X) {
        out0 = h(value, 0);
        out1 = h(value, 1);
    } else {
        out0 = h(0, value);
        out1 = h(1, value);
    }
    return enumerate_unary()[unary_id_from_table(out0, out1)];
}

std::pair<Mat, Mat> build_constraint_matrices(const Rational& p_y1, const Rational& p_x1) {
    if (p_y1 <= 0 || p_y1 >= 1 || p_x1 <= 0 || p_x1 >= 1)
        throw DegenerateCause("cause marginals must lie strictly inside (0, 1)");

    Mat a(4, 16), b(4, 16);
    const Rational p_y[2] = {1 - p_y1, p_y1};
    const Rational p_x[2] = {1 - p_x1, p_x1};
    for (const BinaryResponse& h : enumerate_binary()) {
        for (int v = 0; v < 2; ++v) {
            a(project_binary(h, Axis::Y, v).id, h.id) += p_y[v];
            b(project_binary(h, Axis::X, v).id, h.id) += p_x[v];
        }
    }
    return {a, b};
}

bool HPolytope::contains(const Vec& x) const {
    Vec s = mat_vec(ineq, x);
    for (int r = 0; r < ineq.rows; ++r)
        if (s[r] > ineq_rhs[r]) return false;
    Vec t = mat_vec(eq, x);
    for (int r = 0; r < eq.rows; ++r)
        if (t[r] != eq_rhs[r]) return false;
    return true;
}

bool statistical_merge_check(const MarginalObservation& obs_x, const MarginalObservation& obs_y) {
    return obs_x.p_z0() == obs_y.p_z0();
}

namespace {

// The three row combinations whose application to A (resp. B) eliminates
// lambda: (1,-1,0,0), (1,0,1,0), (1,0,0,1).
constexpr int kEliminationRows[3][4] = {{1, -1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}};

void append_elimination_rows(Mat& eq, Vec& eq_rhs, int& row, const Mat& m,
                             const ResponseVector4& base) {
    for (const auto& combo : kEliminationRows) {
        for (int c = 0; c < 16; ++c) {
            Rational acc = 0;
            for (int j = 0; j < 4; ++j) acc += Rational(combo[j]) * m(j, c);
            eq(row, c) = acc;
        }
        Rational rhs = 0;
        for (int j = 0; j < 4; ++j) rhs += Rational(combo[j]) * base[j];
        eq_rhs[row] = rhs;
        ++row;
    }
}

}  // namespace

MergeProblem build_merge_problem(const MarginalObservation& obs_x, const MarginalObservation& obs_y) {
    if (!statistical_merge_check(obs_x, obs_y))
        throw StatisticallyInconsistent("observations imply P(Z=0) = " + to_fraction(obs_x.p_z0()) +
                                        " from X but " + to_fraction(obs_y.p_z0()) + " from Y");

    auto [a, b] = build_constraint_matrices(obs_y.cause1, obs_x.cause1);
    MarginalFamily fam_a = family_from_observation(obs_x);
    MarginalFamily fam_b = family_from_observation(obs_y);

    HPolytope poly;
    poly.ineq = Mat(32, 16);
    poly.ineq_rhs.assign(32, Rational(0));

    // Row j of A satisfies [Ac]_j = base_j + lambda * dir_j for a shared
    // lambda in [lambda_min, lambda_max]; folding the interval into the rhs
    // gives rows 0..3 (A c <= upper) and 4..7 (-A c <= -lower), then the same
    // two blocks for B at offset 8.
    auto fold_family = [&](const Mat& m, const MarginalFamily& fam, int offset) {
        for (int j = 0; j < 4; ++j) {
            for (int c = 0; c < 16; ++c) {
                poly.ineq(offset + j, c) = m(j, c);
                poly.ineq(offset + 4 + j, c) = -m(j, c);
            }
            int dir = MarginalFamily::direction[j];
            Rational upper = fam.base[j] + (dir > 0 ? fam.lambda_max : -fam.lambda_min);
            Rational lower = fam.base[j] + (dir > 0 ? fam.lambda_min : -fam.lambda_max);
            poly.ineq_rhs[offset + j] = upper;
            poly.ineq_rhs[offset + 4 + j] = -lower;
        }
    };
    fold_family(a, fam_a, 0);
    fold_family(b, fam_b, 8);

    // Rows 16..31: -c <= 0.
    for (int i = 0; i < 16; ++i) poly.ineq(16 + i, i) = -1;

    poly.eq = Mat(7, 16);
    poly.eq_rhs.assign(7, Rational(0));
    int row = 0;
    append_elimination_rows(poly.eq, poly.eq_rhs, row, a, fam_a.base);
    append_elimination_rows(poly.eq, poly.eq_rhs, row, b, fam_b.base);
    for (int c = 0; c < 16; ++c) poly.eq(row, c) = 1;
    poly.eq_rhs[row] = 1;

    ProjectionMap proj;
    proj.m = Mat(2, 16);
    for (int c = 0; c < 16; ++c) {
        proj.m(0, c) = a(0, c);
        proj.m(1, c) = b(0, c);
    }

    return MergeProblem{obs_x, obs_y, fam_a, fam_b, std::move(a), std::move(b), std::move(poly),
                        std::move(proj)};
}

}  // namespace scmp
