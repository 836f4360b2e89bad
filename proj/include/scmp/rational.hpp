#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdio>
#include <string>
#include <string_view>

#include "scmp/errors.hpp"

namespace scmp {

/// Exact rational carrying every probability in the library. Floating-point
/// values appear only at the I/O boundary (sampling, CSV rendering).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline bool is_probability(const Rational& r) { return r >= 0 && r <= 1; }

/// Parses "p/q", integers, and decimal notation ("0.45", "-1.2e-3") exactly.
Rational parse_rational(std::string_view text);

/// Rounds a double to the nearest multiple of 1/denominator.
/// All randomly sampled parameters enter the exact pipeline through here.
Rational rationalize(double x, long denominator = 1'000'000);

/// "p/q", or just "p" when the denominator is one.
std::string to_fraction(const Rational& r);

/// Decimal rendering with 12 significant digits (CSV convention).
std::string to_decimal(const Rational& r);

inline void check_probability(const Rational& r, const char* what) {
    if (!is_probability(r))
        throw InvalidProbability(std::string(what) + " = " + to_fraction(r) + " is outside [0, 1]");
}

/// Closed interval with exact endpoints. lo > hi encodes the empty interval.
struct Interval {
    Rational lo;
    Rational hi;

    bool empty() const { return lo > hi; }
    bool is_point() const { return lo == hi; }
    Rational width() const { return empty() ? Rational(0) : Rational(hi - lo); }
    bool contains(const Rational& x) const { return !empty() && lo <= x && x <= hi; }
    bool contains(const Interval& other) const {
        return other.empty() || (!empty() && lo <= other.lo && other.hi <= hi);
    }
    bool operator==(const Interval& other) const = default;
};

}  // namespace scmp
