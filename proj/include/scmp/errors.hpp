#pragma once

#include <stdexcept>
#include <string>

namespace scmp {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (instance files, objective specs, rationals).
struct ParseError : Error {
    using Error::Error;
};

/// A probability-valued input outside [0, 1].
struct InvalidProbability : Error {
    using Error::Error;
};

/// Cause marginal P(cause=1) in {0, 1}; the parametrization divides by it.
struct DegenerateCause : Error {
    using Error::Error;
};

struct LambdaOutOfRange : Error {
    using Error::Error;
};

struct ThetaOutOfRange : Error {
    using Error::Error;
};

/// The two observations imply different marginals over Z.
struct StatisticallyInconsistent : Error {
    using Error::Error;
};

/// Statistically mergeable but no counterfactually consistent joint model.
struct CounterfactuallyInfeasible : Error {
    using Error::Error;
};

/// Vertex enumeration on an infeasible H-representation.
struct EmptyPolytope : Error {
    using Error::Error;
};

/// Confounded program has no feasible (qA, qB, q).
struct InfeasibleModel : Error {
    using Error::Error;
};

/// Query not answerable by any of the partial models without extra assumptions.
struct UnidentifiableQuery : Error {
    using Error::Error;
};

}  // namespace scmp
