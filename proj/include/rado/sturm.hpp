#pragma once

// Exact univariate polynomial arithmetic over Q: gcd with monic
// normalization, Sturm chains, positive-root counting and isolation.
// Used to decide whether a system admits a constant positive solution.

#include "rado/polynomial.hpp"

#include <optional>
#include <vector>

namespace rado {

// Dense univariate polynomial; index = degree, no trailing zero coefficients.
using UniPoly = std::vector<Rational>;

inline void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int uni_degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

inline bool uni_is_zero(const UniPoly& p) { return p.empty(); }

inline Rational uni_eval(const UniPoly& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

inline UniPoly uni_derivative(const UniPoly& p) {
    UniPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(Rational(static_cast<int>(i)) * p[i]);
    uni_trim(d);
    return d;
}

inline UniPoly uni_monic(UniPoly p) {
    uni_trim(p);
    if (p.empty()) return p;
    Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

// Remainder of a by b (b nonzero).
inline UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    uni_trim(a);
    if (b.empty()) throw std::invalid_argument("division by zero polynomial");
    while (!a.empty() && a.size() >= b.size()) {
        Rational q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        uni_trim(a);
    }
    return a;
}

// Euclidean gcd, monic-normalized. gcd(0, p) = monic(p).
inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return uni_monic(std::move(a));
}

// Canonical Sturm chain: p, p', then negated remainders.
inline std::vector<UniPoly> sturm_chain(UniPoly p) {
    uni_trim(p);
    std::vector<UniPoly> chain;
    if (p.empty()) return chain;
    chain.push_back(p);
    UniPoly d = uni_derivative(p);
    if (d.empty()) return chain;
    chain.push_back(d);
    while (true) {
        UniPoly r = uni_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sign_changes(const std::vector<int>& signs) {
    int changes = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

inline int sturm_variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(sign(uni_eval(q, x)));
    return sign_changes(signs);
}

inline int sturm_variations_at_pos_inf(const std::vector<UniPoly>& chain) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(q.empty() ? 0 : sign(q.back()));
    return sign_changes(signs);
}

// Number of distinct real roots in the half-open interval (lo, hi].
inline int sturm_count_interval(const std::vector<UniPoly>& chain, const Rational& lo,
                                const Rational& hi) {
    return sturm_variations_at(chain, lo) - sturm_variations_at(chain, hi);
}

// Distinct roots in (0, +inf). The factor t^k is divided out first so the
// chain endpoints are not zeros of p.
inline int count_positive_roots(UniPoly p) {
    uni_trim(p);
    if (p.empty()) throw std::invalid_argument("root count of zero polynomial");
    size_t ord = 0;
    while (ord < p.size() && p[ord] == 0) ++ord;
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(ord));
    if (uni_degree(p) < 1) return 0;
    auto chain = sturm_chain(p);
    return sturm_variations_at(chain, Rational(0)) - sturm_variations_at_pos_inf(chain);
}

// Upper bound on the magnitude of all real roots.
inline Rational cauchy_root_bound(const UniPoly& p) {
    Rational m(0);
    for (size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, rational_abs(p[i] / p.back()));
    return m + 1;
}

struct RootInterval {
    Rational lo, hi;  // exactly one root of the queried polynomial in (lo, hi]
};

// Isolates one positive root by Sturm-guided bisection; empty if none.
inline std::optional<RootInterval> isolate_positive_root(UniPoly p) {
    uni_trim(p);
    if (p.empty()) return std::nullopt;
    size_t ord = 0;
    while (ord < p.size() && p[ord] == 0) ++ord;
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(ord));
    if (uni_degree(p) < 1) return std::nullopt;
    auto chain = sturm_chain(p);
    Rational lo(0), hi = cauchy_root_bound(p);
    int count = sturm_count_interval(chain, lo, hi);
    if (count <= 0) return std::nullopt;
    while (count > 1) {
        Rational mid = (lo + hi) / 2;
        int left = sturm_count_interval(chain, lo, mid);
        if (left >= 1) {
            hi = mid;
            count = left;
        } else {
            lo = mid;
            count -= left;
        }
    }
    return RootInterval{lo, hi};
}

// ---- constant positive solutions ---------------------------------------

struct ConstantSolutionReport {
    enum class Kind { None, WitnessInterval, AllPositive };
    Kind kind = Kind::None;
    std::optional<RootInterval> interval;  // set for WitnessInterval
};

// Substitutes every variable by t and returns the univariate image.
inline UniPoly diagonal_restriction(const Polynomial& p) {
    UniPoly q;
    for (const auto& t : p.terms()) {
        size_t d = static_cast<size_t>(t.total_degree());
        if (q.size() <= d) q.resize(d + 1, Rational(0));
        q[d] += t.coeff;
    }
    uni_trim(q);
    return q;
}

// Decides whether sigma(t, ..., t) = 0 for some t > 0. Each equation is
// restricted to the diagonal; common positive roots are the positive roots
// of the gcd of the nonzero restrictions (identically-zero restrictions
// constrain nothing).
inline ConstantSolutionReport has_constant_positive_solution(const PolySystem& sys) {
    ConstantSolutionReport rep;
    UniPoly g;
    bool any_nonzero = false;
    for (const auto& p : sys.polynomials()) {
        UniPoly q = diagonal_restriction(p);
        if (uni_is_zero(q)) continue;
        any_nonzero = true;
        g = uni_gcd(std::move(g), std::move(q));
    }
    if (!any_nonzero) {
        rep.kind = ConstantSolutionReport::Kind::AllPositive;
        return rep;
    }
    auto iso = isolate_positive_root(g);
    if (!iso) {
        rep.kind = ConstantSolutionReport::Kind::None;
        return rep;
    }
    rep.kind = ConstantSolutionReport::Kind::WitnessInterval;
    rep.interval = *iso;
    return rep;
}

}  // namespace rado
