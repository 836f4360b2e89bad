#pragma once

#include <array>
#include <utility>

#include "scmp/rational.hpp"

namespace scmp {

/// What one dataset reveals about a cause-effect pair: the effect conditionals
/// P(Z=0|cause=i) and the cause marginal P(cause=1).
struct MarginalObservation {
    Rational p0_given0;  // P(Z=0 | cause=0)
    Rational p0_given1;  // P(Z=0 | cause=1)
    Rational cause1;     // P(cause=1), strictly inside (0, 1)

    MarginalObservation(Rational p00, Rational p01, Rational c1);

    Rational cause0() const { return 1 - cause1; }
    /// Implied marginal P(Z=0).
    Rational p_z0() const { return p0_given0 * cause0() + p0_given1 * cause1; }
};

/// Distribution over the four unary response functions, a point of the
/// 3-simplex.
using ResponseVector4 = std::array<Rational, 4>;

/// The one-parameter family of response distributions consistent with an
/// observed kernel: a(lambda) = base + lambda * (1, 1, -1, -1).
struct MarginalFamily {
    ResponseVector4 base;  // a at lambda = 0; not itself a simplex point in general
    Rational lambda_min;   // max{0, p00 + p01 - 1}
    Rational lambda_max;   // min{p00, p01}

    static constexpr std::array<int, 4> direction{1, 1, -1, -1};

    Interval lambda_range() const { return {lambda_min, lambda_max}; }
};

MarginalFamily family_from_observation(const MarginalObservation& obs);

/// base + lambda * direction; throws LambdaOutOfRange outside the family range.
ResponseVector4 response_vector(const MarginalFamily& family, const Rational& lambda);

/// gamma = a2 + a3 = p00 + p01 - 2 lambda: probability that the effect would
/// have flipped had the cause flipped.
Rational counterfactual_influence(const MarginalFamily& family, const Rational& lambda);

/// (P(Z=0|cause=0), P(Z=0|cause=1)) induced by a response distribution.
std::pair<Rational, Rational> markov_kernel(const ResponseVector4& v);

}  // namespace scmp
