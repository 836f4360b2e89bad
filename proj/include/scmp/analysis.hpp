#pragma once

#include <utility>

#include "scmp/merge.hpp"
#include "scmp/polytope.hpp"

namespace scmp {

/// Prior and merged parameter ranges of one instance, with the feasible
/// polygon and the two reduction ratios.
///
/// Ratio convention for degenerate priors: the box ratio is the product over
/// dimensions of merged width / prior width, where a zero-width prior
/// dimension contributes a factor of one; the polygon ratio degenerates the
/// same way (length ratio along the non-degenerate dimension, or one when the
/// prior is a single point).
struct BoundsReport {
    Interval lambda_a_prior;
    Interval lambda_b_prior;
    Interval lambda_a_merged;
    Interval lambda_b_merged;
    Polygon2 polygon;
    Rational area_ratio_box;
    Rational area_ratio_polygon;
};

/// Full report: priors from the families, polygon via vertex enumeration,
/// merged intervals via LPs. Throws CounterfactuallyInfeasible when no joint
/// model exists.
BoundsReport bounds_report(const MergeProblem& problem);

/// (min, max) of <objective, c> over the feasible polytope.
std::pair<Rational, Rational> query_bounds(const MergeProblem& problem, const Vec& objective);

/// Objective expressing the counterfactual influence of X (a2 + a3 through
/// the rows of A); analogously for Y.
Vec gamma_x_objective(const MergeProblem& problem);
Vec gamma_y_objective(const MergeProblem& problem);

/// Observations relabeled so that both effect deltas are nonnegative:
/// P(Z=0|cause=1) >= P(Z=0|cause=0) on each side.
struct NormalizedPair {
    MarginalObservation obs_x;
    MarginalObservation obs_y;
    bool swap_x;  // true iff the X value labels were exchanged
    bool swap_y;
};
NormalizedPair normalize_signs(const MarginalObservation& obs_x, const MarginalObservation& obs_y);

/// Feasible range for q00 = P(Z=0|X=0, Y=0) in the sign-normalized labeling:
/// [max(eta1, eta4, eta5), min(eta2, eta3, eta6)]. Nonempty whenever the
/// observations are statistically mergeable.
struct Lemma1Result {
    Interval q00;
    bool swap_x;
    bool swap_y;
};
Lemma1Result lemma1_interval(const MarginalObservation& obs_x, const MarginalObservation& obs_y);

/// Joint response distribution c achieving lambda_a = lambda_a_max and
/// lambda_b = lambda_b_max simultaneously, built from a monotone conditional
/// chain. Throws StatisticallyInconsistent when no joint distribution exists.
Vec prop1_witness(const MarginalObservation& obs_x, const MarginalObservation& obs_y);

/// Closed forms for the AND-model worked example, independent of the LP
/// pipeline: the unique Y->Z model and the merged lambda_a interval.
struct AndModelReference {
    Rational lambda_b_star;  // (2 theta - 1) / (2 theta)
    ResponseVector4 b;       // (lambda_b_star, 0, 1/(2 theta), 0)
    Interval lambda_a;       // [1 - theta, 1/2]
};
AndModelReference and_model_reference(const Rational& theta);

/// The observation pair realizing the worked example: X independent of Z,
/// P(Z=1) = 1/2, P(Y=0, Z=1) = 0, P(Y=1) = theta.
std::pair<MarginalObservation, MarginalObservation> and_example_observations(
    const Rational& theta, const Rational& p_x1 = Rational(1, 2));

}  // namespace scmp
