#include "scmp/analysis.hpp"

#include <algorithm>

#include "scmp/errors.hpp"

namespace scmp {

namespace {

Rational interval_bound(const MergeProblem& problem, int projection_row, Sense sense) {
    LpResult r = solve_lp(problem.polytope, problem.projection.m.row(projection_row), sense);
    if (r.status != LpResult::Status::Optimal)
        throw CounterfactuallyInfeasible("no counterfactually consistent joint model exists");
    return r.value;
}

Rational ratio_factor(const Interval& merged, const Interval& prior) {
    if (prior.width() == 0) return Rational(1);
    return merged.width() / prior.width();
}

}  // namespace

BoundsReport bounds_report(const MergeProblem& problem) {
    BoundsReport report;
    report.lambda_a_prior = problem.family_a.lambda_range();
    report.lambda_b_prior = problem.family_b.lambda_range();

    std::vector<Vertex> vertices;
    try {
        vertices = enumerate_vertices(problem.polytope);
    } catch (const EmptyPolytope&) {
        throw CounterfactuallyInfeasible("no counterfactually consistent joint model exists");
    }
    report.polygon = project_hull(vertices, problem.projection);

    report.lambda_a_merged = {interval_bound(problem, 0, Sense::Min), interval_bound(problem, 0, Sense::Max)};
    report.lambda_b_merged = {interval_bound(problem, 1, Sense::Min), interval_bound(problem, 1, Sense::Max)};

    report.area_ratio_box = ratio_factor(report.lambda_a_merged, report.lambda_a_prior) *
                            ratio_factor(report.lambda_b_merged, report.lambda_b_prior);

    const Rational wa = report.lambda_a_prior.width();
    const Rational wb = report.lambda_b_prior.width();
    if (wa > 0 && wb > 0) {
        report.area_ratio_polygon = polygon_area(report.polygon) / (wa * wb);
    } else if (wa > 0 || wb > 0) {
        auto [ex, ey] = polygon_extents(report.polygon);
        report.area_ratio_polygon = wa > 0 ? ex.width() / wa : ey.width() / wb;
    } else {
        report.area_ratio_polygon = 1;
    }
    return report;
}

std::pair<Rational, Rational> query_bounds(const MergeProblem& problem, const Vec& objective) {
    LpResult lo = solve_lp(problem.polytope, objective, Sense::Min);
    LpResult hi = solve_lp(problem.polytope, objective, Sense::Max);
    if (lo.status != LpResult::Status::Optimal || hi.status != LpResult::Status::Optimal)
        throw CounterfactuallyInfeasible("no counterfactually consistent joint model exists");
    return {lo.value, hi.value};
}

Vec gamma_x_objective(const MergeProblem& problem) {
    Vec obj(16);
    for (int c = 0; c < 16; ++c) obj[c] = problem.a(2, c) + problem.a(3, c);
    return obj;
}

Vec gamma_y_objective(const MergeProblem& problem) {
    Vec obj(16);
    for (int c = 0; c < 16; ++c) obj[c] = problem.b(2, c) + problem.b(3, c);
    return obj;
}

namespace {

MarginalObservation flip_cause(const MarginalObservation& obs) {
    return MarginalObservation(obs.p0_given1, obs.p0_given0, obs.cause0());
}

struct NormalizedQuantities {
    Rational p00x, p01x;  // P(Z=0|X=0), P(Z=0|X=1), deltas nonnegative
    Rational p00y, p01y;
    Rational px0, px1, py0, py1;
};

NormalizedQuantities quantities(const NormalizedPair& n) {
    return {n.obs_x.p0_given0, n.obs_x.p0_given1, n.obs_y.p0_given0, n.obs_y.p0_given1,
            n.obs_x.cause0(),  n.obs_x.cause1,    n.obs_y.cause0(),  n.obs_y.cause1};
}

// Remaining conditionals once q00 is fixed (relations (a)-(c) of the monotone
// chain construction).
struct ChainConditionals {
    Rational q01, q10, q11;
};

ChainConditionals derive_chain(const NormalizedQuantities& v, const Rational& q00) {
    ChainConditionals c;
    c.q01 = (v.p00x - q00 * v.py0) / v.py1;
    c.q10 = (v.p00y - q00 * v.px0) / v.px1;
    c.q11 = (v.p01y - c.q01 * v.px0) / v.px1;
    return c;
}

// Exchanging the value labels of X permutes the binary response table rows
// x=0 <-> x=1, i.e. bits (0,1) <-> (2,3) of the function index.
int swap_x_index(int k) {
    return ((k & 0b0011) << 2) | ((k & 0b1100) >> 2);
}

// Y relabeling swaps table rows y=0 <-> y=1: bits 0 <-> 1 and 2 <-> 3.
int swap_y_index(int k) {
    return ((k & 0b0101) << 1) | ((k & 0b1010) >> 1);
}

}  // namespace

NormalizedPair normalize_signs(const MarginalObservation& obs_x, const MarginalObservation& obs_y) {
    bool swap_x = obs_x.p0_given1 < obs_x.p0_given0;
    bool swap_y = obs_y.p0_given1 < obs_y.p0_given0;
    return {swap_x ? flip_cause(obs_x) : obs_x, swap_y ? flip_cause(obs_y) : obs_y, swap_x, swap_y};
}

Lemma1Result lemma1_interval(const MarginalObservation& obs_x, const MarginalObservation& obs_y) {
    if (!statistical_merge_check(obs_x, obs_y))
        throw StatisticallyInconsistent("observations imply different marginals over Z");

    NormalizedPair n = normalize_signs(obs_x, obs_y);
    NormalizedQuantities v = quantities(n);
    Rational delta_x = v.p01x - v.p00x;
    Rational delta_y = v.p01y - v.p00y;

    Rational eta1 = 0;
    const Rational& eta2 = v.p00x;
    const Rational& eta3 = v.p00y;
    Rational eta4 = v.p00y - delta_x * v.px1 / v.py0;
    Rational eta5 = v.p00x - delta_y * v.py1 / v.px0;
    Rational eta6 = (v.px1 * v.py1 - v.p01y * v.py1 + v.p00x * v.px0) / (v.px0 * v.py0);

    Interval q00{std::max({eta1, eta4, eta5}), std::min({eta2, eta3, eta6})};
    return {q00, n.swap_x, n.swap_y};
}

Vec prop1_witness(const MarginalObservation& obs_x, const MarginalObservation& obs_y) {
    Lemma1Result lemma = lemma1_interval(obs_x, obs_y);
    NormalizedPair n = normalize_signs(obs_x, obs_y);
    NormalizedQuantities v = quantities(n);

    // Any interior choice works; the midpoint avoids boundary degeneracies in
    // the derived conditionals.
    Rational q00 = (lemma.q00.lo + lemma.q00.hi) / 2;
    ChainConditionals q = derive_chain(v, q00);

    Vec c(16, Rational(0));
    c[0] = q00;
    c[15] = 1 - q.q11;
    if (q.q01 >= q.q10) {
        c[1] = q.q10 - q00;
        c[5] = q.q01 - q.q10;
        c[7] = q.q11 - q.q01;
    } else {
        c[1] = q.q01 - q00;
        c[3] = q.q10 - q.q01;
        c[7] = q.q11 - q.q10;
    }

    if (!lemma.swap_x && !lemma.swap_y) return c;
    Vec mapped(16, Rational(0));
    for (int k = 0; k < 16; ++k) {
        int target = k;
        if (lemma.swap_x) target = swap_x_index(target);
        if (lemma.swap_y) target = swap_y_index(target);
        mapped[target] = c[k];
    }
    return mapped;
}

AndModelReference and_model_reference(const Rational& theta) {
    if (theta < Rational(1, 2) || theta >= 1)
        throw ThetaOutOfRange("theta = " + to_fraction(theta) + " outside [1/2, 1)");
    AndModelReference ref;
    ref.lambda_b_star = (2 * theta - 1) / (2 * theta);
    ref.b = {ref.lambda_b_star, Rational(0), 1 / (2 * theta), Rational(0)};
    ref.lambda_a = {1 - theta, Rational(1, 2)};
    return ref;
}

std::pair<MarginalObservation, MarginalObservation> and_example_observations(const Rational& theta,
                                                                             const Rational& p_x1) {
    if (theta < Rational(1, 2) || theta >= 1)
        throw ThetaOutOfRange("theta = " + to_fraction(theta) + " outside [1/2, 1)");
    MarginalObservation obs_x(Rational(1, 2), Rational(1, 2), p_x1);
    MarginalObservation obs_y(Rational(1), (2 * theta - 1) / (2 * theta), theta);
    return {obs_x, obs_y};
}

}  // namespace scmp
