// Sturm chains, positive-root counting, constant-solution analysis.

#include "rado/parser.hpp"
#include "rado/sturm.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace rado;

namespace {

// Builds c * prod (t - r_i) * prod (t^2 + a t + b) with the quadratics
// verified to have negative discriminant, so the real roots are exactly
// the r_i. Counting sign-change intervals after bisecting below the
// minimal root gap is then an oracle independent of the Sturm chain.
struct FactoredPoly {
    UniPoly p;
    std::vector<Rational> real_roots;  // distinct
};

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

FactoredPoly rnd_factored(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n_lin(0, 4);
    std::uniform_int_distribution<int> n_quad(0, 1);
    std::uniform_int_distribution<long long> root_num(-1000000, 2000000);
    std::uniform_int_distribution<int> root_den(1, 7);
    FactoredPoly f;
    f.p = {Rational(1)};
    int lin = n_lin(rng);
    for (int i = 0; i < lin; ++i) {
        Rational r(root_num(rng), root_den(rng));
        bool dup = false;
        for (const auto& seen : f.real_roots)
            if (seen == r) dup = true;
        if (dup) continue;
        f.real_roots.push_back(r);
        f.p = uni_mul(f.p, UniPoly{-r, Rational(1)});
    }
    int quad = n_quad(rng);
    std::uniform_int_distribution<int> small(-4, 4);
    for (int i = 0; i < quad; ++i) {
        Rational a(small(rng));
        Rational b = a * a / 4 + 1 + std::abs(small(rng));  // discriminant < 0
        REQUIRE(a * a - 4 * b < 0);
        f.p = uni_mul(f.p, UniPoly{b, a, Rational(1)});
    }
    return f;
}

// Full bisection of (lo, hi) down to intervals of width <= gap; counts the
// sign-changing intervals. Sound when all real roots are simple and
// pairwise farther apart than gap, and none sits on a grid point.
int bisection_count(const UniPoly& p, const Rational& lo, const Rational& hi,
                    const Rational& gap) {
    int depth = 0;
    Rational width = hi - lo;
    while (width > gap) {
        width /= 2;
        ++depth;
    }
    long long cells = 1LL << depth;
    int count = 0;
    int prev = sign(uni_eval(p, lo));
    for (long long k = 1; k <= cells; ++k) {
        Rational x = lo + (hi - lo) * Rational(k, cells);
        int s = sign(uni_eval(p, x));
        if (s == 0) ++count;  // root exactly at a cut point
        if (prev != 0 && s != 0 && s != prev) ++count;
        if (s != 0) prev = s;
    }
    return count;
}

// Sign-change count over brackets r +- gap/2 around each candidate root,
// independent of the Sturm chain (only endpoint signs are used).
int bracket_count(const UniPoly& p, const std::vector<Rational>& roots, const Rational& gap,
                  const Rational& lo, const Rational& hi) {
    int count = 0;
    for (const auto& r : roots) {
        if (r <= lo || r > hi) continue;
        Rational a = r - gap / 2, b = r + gap / 2;
        if (sign(uni_eval(p, a)) * sign(uni_eval(p, b)) < 0) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("sturm agrees with sign-change counting on random polynomials") {
    std::mt19937_64 rng(424242);
    const Rational hi(1000000);
    for (int it = 0; it < 100; ++it) {
        FactoredPoly f = rnd_factored(rng);
        if (uni_degree(f.p) < 1) continue;
        Rational gap(1, 2);
        for (size_t i = 0; i < f.real_roots.size(); ++i)
            for (size_t j = i + 1; j < f.real_roots.size(); ++j)
                gap = std::min(gap, rational_abs(f.real_roots[i] - f.real_roots[j]) / 2);

        int expected = 0;
        for (const auto& r : f.real_roots)
            if (r > 0 && r <= hi) ++expected;

        auto chain = sturm_chain(f.p);
        REQUIRE(sturm_count_interval(chain, Rational(0), hi) == expected);
        REQUIRE(bracket_count(f.p, f.real_roots, gap, Rational(0), hi) == expected);
    }
}

TEST_CASE("sturm agrees with full bisection on integer-root polynomials") {
    std::mt19937_64 rng(515151);
    std::uniform_int_distribution<int> n_lin(1, 4);
    std::uniform_int_distribution<int> root(-16, 48);
    const Rational lo(0), hi(64);
    for (int it = 0; it < 60; ++it) {
        UniPoly p = {Rational(1)};
        std::vector<Rational> roots;
        int lin = n_lin(rng);
        for (int i = 0; i < lin; ++i) {
            // offset by 1/3 so no root lands on a dyadic grid point
            Rational r = Rational(root(rng)) + Rational(1, 3);
            bool dup = false;
            for (const auto& seen : roots)
                if (seen == r) dup = true;
            if (dup) continue;
            roots.push_back(r);
            p = uni_mul(p, UniPoly{-r, Rational(1)});
        }
        int expected = 0;
        for (const auto& r : roots)
            if (r > lo && r <= hi) ++expected;
        auto chain = sturm_chain(p);
        REQUIRE(sturm_count_interval(chain, lo, hi) == expected);
        REQUIRE(bisection_count(p, lo, hi, Rational(1, 4)) == expected);
    }
}

TEST_CASE("count_positive_roots handles roots at zero and multiplicity") {
    // t^2 (t - 3)
    UniPoly p = {Rational(0), Rational(0), Rational(-3), Rational(1)};
    REQUIRE(count_positive_roots(p) == 1);
    // (t - 1)^2 = t^2 - 2t + 1: one distinct positive root
    REQUIRE(count_positive_roots(UniPoly{Rational(1), Rational(-2), Rational(1)}) == 1);
    // t^2 + 1: none
    REQUIRE(count_positive_roots(UniPoly{Rational(1), Rational(0), Rational(1)}) == 0);
    // t: no root in (0, inf)
    REQUIRE(count_positive_roots(UniPoly{Rational(0), Rational(1)}) == 0);
}

TEST_CASE("isolate_positive_root returns a certified bracket") {
    // (t - 2)(t - 5) = t^2 - 7 t + 10
    UniPoly p = {Rational(10), Rational(-7), Rational(1)};
    auto iso = isolate_positive_root(p);
    REQUIRE(iso.has_value());
    auto chain = sturm_chain(p);
    REQUIRE(sturm_count_interval(chain, iso->lo, iso->hi) == 1);
    REQUIRE(iso->lo >= 0);
}

TEST_CASE("has_constant_positive_solution spec examples") {
    auto r1 = has_constant_positive_solution(parse_system("x + y - 2z"));
    REQUIRE(r1.kind == ConstantSolutionReport::Kind::AllPositive);

    auto r2 = has_constant_positive_solution(parse_system("x + y - z"));
    REQUIRE(r2.kind == ConstantSolutionReport::Kind::None);

    // q1(t) = -3t^2, q2(t) = -t: common roots only at 0.
    auto r3 = has_constant_positive_solution(parse_system("x^2 - 4y^2; x - 2y"));
    REQUIRE(r3.kind == ConstantSolutionReport::Kind::None);

    // x + y - z^2: q(t) = 2t - t^2 has the positive root t = 2.
    auto r4 = has_constant_positive_solution(parse_system("x + y - z^2"));
    REQUIRE(r4.kind == ConstantSolutionReport::Kind::WitnessInterval);
    REQUIRE(r4.interval.has_value());
    REQUIRE(r4.interval->lo < 2);
    REQUIRE(r4.interval->hi >= 2);

    // Mixed: one identically-zero restriction does not constrain.
    auto r5 = has_constant_positive_solution(parse_system("x - y; x + y - z^2"));
    REQUIRE(r5.kind == ConstantSolutionReport::Kind::WitnessInterval);

    auto r6 = has_constant_positive_solution(parse_system("a + b - c*d"));
    // q(t) = 2t - t^2, root t = 2.
    REQUIRE(r6.kind == ConstantSolutionReport::Kind::WitnessInterval);
}

TEST_CASE("uni_gcd is monic and divides both inputs") {
    // gcd((t-1)(t-2), (t-1)(t-3)) = t - 1
    UniPoly a = uni_mul(UniPoly{Rational(-1), Rational(1)}, UniPoly{Rational(-2), Rational(1)});
    UniPoly b = uni_mul(UniPoly{Rational(-1), Rational(1)}, UniPoly{Rational(-3), Rational(1)});
    UniPoly g = uni_gcd(a, b);
    REQUIRE(g == UniPoly{Rational(-1), Rational(1)});
    REQUIRE(uni_rem(a, g).empty());
    REQUIRE(uni_rem(b, g).empty());
    // gcd with zero
    REQUIRE(uni_gcd(UniPoly{}, UniPoly{Rational(2), Rational(4)}) ==
            UniPoly{Rational(1, 2), Rational(1)});
}
