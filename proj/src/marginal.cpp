#include "scmp/marginal.hpp"

#include <algorithm>

#include "scmp/errors.hpp"

namespace scmp {

MarginalObservation::MarginalObservation(Rational p00, Rational p01, Rational c1)
    : p0_given0(std::move(p00)), p0_given1(std::move(p01)), cause1(std::move(c1)) {
    check_probability(p0_given0, "P(Z=0|cause=0)");
    check_probability(p0_given1, "P(Z=0|cause=1)");
    check_probability(cause1, "P(cause=1)");
    if (cause1 == 0 || cause1 == 1)
        throw DegenerateCause("P(cause=1) = " + to_fraction(cause1) + "; the cause must not be constant");
}

MarginalFamily family_from_observation(const MarginalObservation& obs) {
    MarginalFamily f;
    f.base = {Rational(0), 1 - obs.p0_given0 - obs.p0_given1, obs.p0_given0, obs.p0_given1};
    f.lambda_min = std::max(Rational(0), Rational(obs.p0_given0 + obs.p0_given1 - 1));
    f.lambda_max = std::min(obs.p0_given0, obs.p0_given1);
    return f;
}

ResponseVector4 response_vector(const MarginalFamily& family, const Rational& lambda) {
    if (lambda < family.lambda_min || lambda > family.lambda_max)
        throw LambdaOutOfRange("lambda = " + to_fraction(lambda) + " outside [" +
                               to_fraction(family.lambda_min) + ", " + to_fraction(family.lambda_max) + "]");
    ResponseVector4 v;
    for (int i = 0; i < 4; ++i) v[i] = family.base[i] + lambda * MarginalFamily::direction[i];
    return v;
}

Rational counterfactual_influence(const MarginalFamily& family, const Rational& lambda) {
    ResponseVector4 v = response_vector(family, lambda);
    return v[2] + v[3];
}

std::pair<Rational, Rational> markov_kernel(const ResponseVector4& v) {
    return {v[0] + v[2], v[0] + v[3]};
}

}  // namespace scmp
