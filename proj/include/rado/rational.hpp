#pragma once

// Exact rational scalar used everywhere in the library. Backed by
// boost::multiprecision::cpp_rational, which keeps values normalized
// (positive denominator, gcd-reduced, zero as 0/1).

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rado {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when an input budget (node cap, refinement cap, timeout) is hit.
// Distinct from a verdict: callers must never turn this into an answer.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Parses "n", "-n" or "n/d" with nonzero d. Throws std::invalid_argument on
// malformed input.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: '" + s + "'");
    }
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline int sign(const Rational& r) { return r.sign(); }

inline Rational rational_pow(const Rational& base, unsigned exp) {
    if (exp == 0) return Rational(1);
    Integer num = boost::multiprecision::pow(numerator(base), exp);
    Integer den = boost::multiprecision::pow(denominator(base), exp);
    return Rational(num, den);
}

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Floor of the integer n-th root of a nonnegative integer.
inline Integer integer_nth_root_floor(const Integer& value, unsigned n) {
    if (value < 0) throw std::invalid_argument("nth root of negative integer");
    if (n == 0) throw std::invalid_argument("zeroth root");
    if (value == 0 || value == 1 || n == 1) return value;
    Integer lo = 0, hi = value;
    while (lo < hi) {
        Integer mid = (lo + hi + 1) / 2;
        if (boost::multiprecision::pow(mid, n) <= value)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

// Exact positive n-th root of a positive rational, if one exists.
inline std::optional<Rational> exact_nth_root(const Rational& value, unsigned n) {
    if (value <= 0) return std::nullopt;
    Integer num = numerator(value), den = denominator(value);
    Integer rn = integer_nth_root_floor(num, n);
    if (boost::multiprecision::pow(rn, n) != num) return std::nullopt;
    Integer rd = integer_nth_root_floor(den, n);
    if (boost::multiprecision::pow(rd, n) != den) return std::nullopt;
    return Rational(rn, rd);
}

}  // namespace rado
