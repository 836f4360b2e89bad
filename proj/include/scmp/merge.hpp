#pragma once

#include <utility>

#include "scmp/marginal.hpp"
#include "scmp/matrix.hpp"
#include "scmp/responses.hpp"

namespace scmp {

enum class Axis { X, Y };

/// The unary function obtained from h by fixing one argument:
/// fixing X = x yields y -> h(x, y); fixing Y = y yields x -> h(x, y).
UnaryResponse project_binary(const BinaryResponse& h, Axis fixed_variable, int value);

/// Mixing matrices linking a joint response distribution c to the marginal
/// ones: A[j][k] = sum_y P(Y=y) 1{ h_k(., y) == f_j }, and B with the roles of
/// X and Y swapped. Every column of each sums to one.
std::pair<Mat, Mat> build_constraint_matrices(const Rational& p_y1, const Rational& p_x1);

/// H-representation: { x : ineq x <= ineq_rhs, eq x = eq_rhs }.
struct HPolytope {
    Mat ineq;
    Vec ineq_rhs;
    Mat eq;
    Vec eq_rhs;

    int dimension() const { return ineq.cols != 0 ? ineq.cols : eq.cols; }

    /// Exact membership with zero slack tolerance.
    bool contains(const Vec& x) const;
};

/// The affine map c -> (lambda_a, lambda_b): row 0 of A stacked on row 0 of B.
struct ProjectionMap {
    Mat m;  // 2 x 16
};

struct MergeProblem {
    MarginalObservation obs_x;
    MarginalObservation obs_y;
    MarginalFamily family_a;
    MarginalFamily family_b;
    Mat a;  // 4 x 16
    Mat b;  // 4 x 16
    HPolytope polytope;
    ProjectionMap projection;
};

/// True iff both observations imply the same P(Z=0), checked exactly.
bool statistical_merge_check(const MarginalObservation& obs_x, const MarginalObservation& obs_y);

/// Assembles the feasible polytope over joint response distributions c:
///   ineq rows: A, -A, B, -B (lambda interval bounds folded into the rhs)
///              followed by -I (positivity), 32 rows total;
///   eq rows:   three lambda-elimination rows per marginal plus normalization.
/// Throws StatisticallyInconsistent when the marginals disagree on P(Z).
MergeProblem build_merge_problem(const MarginalObservation& obs_x, const MarginalObservation& obs_y);

}  // namespace scmp
