#include "scmp/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace scmp {

namespace {

Integer pow10(long e) {
    Integer r = 1;
    for (long i = 0; i < e; ++i) r *= 10;
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    // Trim surrounding whitespace.
    size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string s(text.substr(b, e - b));
    if (s.empty()) throw ParseError("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        try {
            Integer n(num), d(den);
            if (d == 0) throw ParseError("zero denominator in '" + s + "'");
            return Rational(n, d);
        } catch (const std::runtime_error&) {
            throw ParseError("cannot parse rational '" + s + "'");
        }
    }

    // Decimal form: [sign] digits [. digits] [(e|E) [sign] digits]
    bool negative = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = s[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_digit = false, seen_dot = false;
    for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
        if (s[i] == '.') {
            if (seen_dot) throw ParseError("cannot parse rational '" + s + "'");
            seen_dot = true;
        } else {
            digits += s[i];
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        }
    }
    if (!seen_digit) throw ParseError("cannot parse rational '" + s + "'");
    long exponent = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool exp_neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            exp_neg = s[i] == '-';
            ++i;
        }
        if (i == s.size()) throw ParseError("cannot parse rational '" + s + "'");
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw ParseError("cannot parse rational '" + s + "'");
            exponent = exponent * 10 + (s[i] - '0');
            if (exponent > 10000) throw ParseError("exponent too large in '" + s + "'");
        }
        if (exp_neg) exponent = -exponent;
    }
    if (i != s.size()) throw ParseError("cannot parse rational '" + s + "'");

    Integer mantissa(digits);
    long net = exponent - frac_digits;
    Rational r = net >= 0 ? Rational(mantissa * pow10(net)) : Rational(mantissa, pow10(-net));
    return negative ? Rational(-r) : r;
}

Rational rationalize(double x, long denominator) {
    if (!std::isfinite(x)) throw InvalidProbability("cannot rationalize non-finite value");
    double scaled = x * static_cast<double>(denominator);
    long long n = std::llround(scaled);
    return Rational(Integer(n), Integer(denominator));
}

std::string to_fraction(const Rational& r) {
    std::string n = numerator(r).str();
    if (denominator(r) == 1) return n;
    return n + "/" + denominator(r).str();
}

std::string to_decimal(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", r.convert_to<double>());
    return buf;
}

}  // namespace scmp
