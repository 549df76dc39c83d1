#pragma once

// Finite ground sets of positive rationals: integer ranges {1..N}, rational
// grids {k/D : 1 <= k <= M, k/D < eps}, geometric grids {2^-k}, and
// explicit element lists. Elements are strictly increasing and positive.

#include "rado/rational.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace rado {

struct GroundSet {
    enum class Kind { IntegerRange, RationalGrid, Geometric, Explicit };

    Kind kind = Kind::Explicit;
    // parameters (meaningful per kind; echoed into reports)
    long long n = 0;          // IntegerRange
    long long denominator = 0;  // RationalGrid
    long long size = 0;       // RationalGrid / Geometric
    Rational epsilon;         // RationalGrid / Geometric bound (0 = unbounded)

    std::vector<Rational> elements;  // strictly increasing, all positive

    static GroundSet integer_range(long long n) {
        if (n < 1) throw std::invalid_argument("integer range needs N >= 1");
        GroundSet g;
        g.kind = Kind::IntegerRange;
        g.n = n;
        for (long long k = 1; k <= n; ++k) g.elements.emplace_back(k);
        return g;
    }

    static GroundSet rational_grid(long long d, long long m, const Rational& eps) {
        if (d < 1 || m < 1) throw std::invalid_argument("rational grid needs D, M >= 1");
        if (eps <= 0) throw std::invalid_argument("rational grid needs eps > 0");
        GroundSet g;
        g.kind = Kind::RationalGrid;
        g.denominator = d;
        g.size = m;
        g.epsilon = eps;
        for (long long k = 1; k <= m; ++k) {
            Rational x(k, d);
            if (x < eps) g.elements.push_back(std::move(x));
        }
        return g;
    }

    static GroundSet geometric(long long m, const Rational& eps) {
        if (m < 1) throw std::invalid_argument("geometric grid needs M >= 1");
        if (eps <= 0) throw std::invalid_argument("geometric grid needs eps > 0");
        GroundSet g;
        g.kind = Kind::Geometric;
        g.size = m;
        g.epsilon = eps;
        for (long long k = m; k >= 1; --k) {  // ascending: 2^-m < ... < 2^-1
            Rational x = rational_pow(Rational(1, 2), static_cast<unsigned>(k));
            if (x < eps) g.elements.push_back(std::move(x));
        }
        return g;
    }

    static GroundSet explicit_set(std::vector<Rational> values) {
        GroundSet g;
        g.kind = Kind::Explicit;
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (const auto& v : values)
            if (v <= 0) throw std::invalid_argument("ground elements must be positive");
        g.elements = std::move(values);
        return g;
    }

    // The same set scaled by a positive rational.
    GroundSet scaled(const Rational& lambda) const {
        if (lambda <= 0) throw std::invalid_argument("scale factor must be positive");
        std::vector<Rational> values;
        values.reserve(elements.size());
        for (const auto& x : elements) values.push_back(lambda * x);
        return explicit_set(std::move(values));
    }

    bool empty() const { return elements.empty(); }

    int index_of(const Rational& x) const {
        auto it = std::lower_bound(elements.begin(), elements.end(), x);
        if (it == elements.end() || *it != x) return -1;
        return static_cast<int>(it - elements.begin());
    }

    std::string describe() const {
        switch (kind) {
            case Kind::IntegerRange:
                return "{1.." + std::to_string(n) + "}";
            case Kind::RationalGrid:
                return "{k/" + std::to_string(denominator) + " : k <= " + std::to_string(size) +
                       ", k/" + std::to_string(denominator) + " < " + to_string(epsilon) + "}";
            case Kind::Geometric:
                return "{2^-k : k <= " + std::to_string(size) + ", 2^-k < " + to_string(epsilon) +
                       "}";
            case Kind::Explicit:
                return "explicit set of " + std::to_string(elements.size()) + " elements";
        }
        return "?";
    }
};

}  // namespace rado
