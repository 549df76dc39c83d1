// Extended elements, the pi enclosure, membership and axiom checks.

#include "rado/semigroup.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace rado;

namespace {

ExtendedElement rnd_element(std::mt19937_64& rng, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms), expd(0, 4), num(-9, 9), den(1, 5);
    ExtendedElement e;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Rational q(num(rng), den(rng));
        e = e + ExtendedElement::term(q, static_cast<unsigned>(expd(rng)));
    }
    return e;
}

}  // namespace

TEST_CASE("extended element arithmetic forms a commutative ring") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 150; ++it) {
        ExtendedElement a = rnd_element(rng, 3), b = rnd_element(rng, 3), c = rnd_element(rng, 3);
        REQUIRE(a + b == b + a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + (-a) == ExtendedElement());
        REQUIRE(ExtendedElement::rational(Rational(1)) * a == a);
    }
}

TEST_CASE("element arithmetic spec examples") {
    ExtendedElement half = ExtendedElement::rational(Rational(1, 2));
    ExtendedElement pi8 = ExtendedElement::term(Rational(1, 8), 1);
    ExtendedElement sum = half + pi8;
    REQUIRE(sum.n_terms() == 2);
    REQUIRE(sum.terms().at(0) == Rational(1, 2));
    REQUIRE(sum.terms().at(1) == Rational(1, 8));

    ExtendedElement prod =
        ExtendedElement::rational(Rational(1, 2)) * ExtendedElement::term(Rational(1, 3), 2);
    REQUIRE(prod == ExtendedElement::term(Rational(1, 6), 2));

    ExtendedElement x = rnd_element(*(new std::mt19937_64(5)), 3);
    REQUIRE((x + Rational(-1) * x).is_zero());
}

TEST_CASE("parse_element literals") {
    REQUIRE(parse_element("1/2 + 1/8*g^1") ==
            ExtendedElement::rational(Rational(1, 2)) + ExtendedElement::term(Rational(1, 8), 1));
    REQUIRE(parse_element("g") == ExtendedElement::term(Rational(1), 1));
    REQUIRE(parse_element("g^3") == ExtendedElement::term(Rational(1), 3));
    REQUIRE(parse_element("2*g") == ExtendedElement::term(Rational(2), 1));
    REQUIRE(parse_element("-2/3") == ExtendedElement::rational(Rational(-2, 3)));
    REQUIRE(parse_element("1 - g") ==
            ExtendedElement::rational(Rational(1)) - ExtendedElement::term(Rational(1), 1));
    REQUIRE_THROWS_AS(parse_element(""), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_element("1/0"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_element("g^"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_element("2**g"), std::invalid_argument);
    // round-trip on printing
    ExtendedElement e = parse_element("1/2 + 1/8*g^1");
    REQUIRE(parse_element(e.str()) == e);
}

TEST_CASE("pi enclosure refines nested and halving") {
    GeneratorEnclosure e = GeneratorEnclosure::pi();
    REQUIRE(e.lower() == 3);
    REQUIRE(e.upper() == Rational(22, 7));
    Rational prev_lo = e.lower(), prev_hi = e.upper(), prev_w = e.width();
    for (int i = 0; i < 12; ++i) {
        e.refine();
        REQUIRE(e.lower() >= prev_lo);
        REQUIRE(e.upper() <= prev_hi);
        REQUIRE(e.width() * 2 <= prev_w);
        prev_lo = e.lower();
        prev_hi = e.upper();
        prev_w = e.width();
    }
    // pi stays inside: check against known tight rational bounds
    REQUIRE(e.lower() < Rational(355, 113));
    REQUIRE(e.upper() > Rational(311, 99));
    REQUIRE(e.lower() > Rational(311, 99));    // 3.1414...
    REQUIRE(e.upper() < Rational(355, 113));   // 3.1415929...
}

TEST_CASE("compare_to_one spec examples") {
    GeneratorEnclosure e = GeneratorEnclosure::pi();
    REQUIRE(compare_to_one(ExtendedElement::term(Rational(1, 8), 1), e) == Ordering::Less);
    REQUIRE(compare_to_one(ExtendedElement::rational(Rational(1)), e) == Ordering::Equal);
    REQUIRE(compare_to_one(ExtendedElement::term(Rational(1, 2), 1), e) == Ordering::Greater);
    REQUIRE(compare_to_one(ExtendedElement(), e) == Ordering::Less);  // zero < 1
    // close calls force refinement: pi^3 / 31 = 1.00028...
    REQUIRE(compare_to_one(ExtendedElement::term(Rational(1, 31), 3), e) == Ordering::Greater);
    REQUIRE(compare_to_one(ExtendedElement::term(Rational(1, 32), 3), e) == Ordering::Less);
}

TEST_CASE("compare_to_one never returns Equal for generator terms") {
    std::mt19937_64 rng(99);
    GeneratorEnclosure e = GeneratorEnclosure::pi();
    std::uniform_int_distribution<int> num(1, 50), den(1, 50), expd(1, 5);
    for (int it = 0; it < 60; ++it) {
        ExtendedElement x = ExtendedElement::term(Rational(num(rng), den(rng)),
                                                  static_cast<unsigned>(expd(rng)));
        REQUIRE(compare_to_one(x, e) != Ordering::Equal);
    }
}

TEST_CASE("refinement cap errors instead of answering") {
    GeneratorEnclosure e = GeneratorEnclosure::pi();
    // 113 pi / 355 is below 1 by ~3e-8; the initial interval cannot decide
    // that, so a zero-round cap must error rather than guess.
    ExtendedElement close = ExtendedElement::term(Rational(113, 355), 1);
    REQUIRE_THROWS_AS(compare_to_one(close, e, 0), BudgetError);
    // with the default cap it resolves
    GeneratorEnclosure e2 = GeneratorEnclosure::pi();
    REQUIRE(compare_to_one(close, e2) == Ordering::Less);
}

TEST_CASE("membership spec examples") {
    SemigroupSpec spec;
    GeneratorEnclosure e = GeneratorEnclosure::pi();
    REQUIRE(membership(ExtendedElement::rational(Rational(1, 2)), spec, e).member);
    REQUIRE(membership(ExtendedElement::term(Rational(1, 8), 1), spec, e).member);

    auto two = membership(parse_element("1/2 + 1/8*g^1"), spec, e);
    REQUIRE_FALSE(two.member);
    REQUIRE(two.reason == "two terms");

    REQUIRE_FALSE(membership(ExtendedElement::rational(Rational(3, 2)), spec, e).member);
    REQUIRE_FALSE(membership(ExtendedElement::rational(Rational(-1, 2)), spec, e).member);
    REQUIRE_FALSE(membership(ExtendedElement(), spec, e).member);
    REQUIRE_FALSE(membership(ExtendedElement::rational(Rational(1)), spec, e).member);
}

TEST_CASE("membership is multiplicatively closed below one") {
    std::mt19937_64 rng(424);
    SemigroupSpec spec;
    GeneratorEnclosure e = GeneratorEnclosure::pi();
    std::uniform_int_distribution<int> num(1, 6), den(2, 9), expd(0, 2);
    int tested = 0;
    for (int it = 0; it < 200 && tested < 60; ++it) {
        ExtendedElement x = ExtendedElement::term(Rational(num(rng), den(rng)),
                                                  static_cast<unsigned>(expd(rng)));
        ExtendedElement y = ExtendedElement::term(Rational(num(rng), den(rng)),
                                                  static_cast<unsigned>(expd(rng)));
        if (!membership(x, spec, e).member || !membership(y, spec, e).member) continue;
        ExtendedElement p = x * y;
        if (compare_to_one(p, e) != Ordering::Less) continue;
        REQUIRE(membership(p, spec, e).member);
        ++tested;
    }
    REQUIRE(tested > 0);
}

TEST_CASE("check_q_infinitesimal sample behavior") {
    SemigroupSpec spec;
    GeneratorEnclosure e = GeneratorEnclosure::pi();
    std::vector<std::pair<Rational, ExtendedElement>> samples = {
        {Rational(2), ExtendedElement::term(Rational(1, 8), 1)},   // pi/4 < 1: must pass
        {Rational(3), ExtendedElement::term(Rational(1, 8), 1)},   // 3 pi/8 = 1.17..: skipped
        {Rational(7), ExtendedElement::rational(Rational(1, 2))},  // 7/2 > 1: skipped
        {Rational(1), ExtendedElement::term(Rational(1, 8), 1)},   // identity
    };
    auto rep = check_q_infinitesimal(spec, samples, e);
    REQUIRE(rep.ok);
    REQUIRE(rep.entries.size() == 4);
    REQUIRE(rep.entries[0].status == QInfinitesimalReport::Entry::Status::Passed);
    REQUIRE(rep.entries[1].status == QInfinitesimalReport::Entry::Status::Skipped);
    REQUIRE(rep.entries[2].status == QInfinitesimalReport::Entry::Status::Skipped);
    REQUIRE(rep.entries[3].status == QInfinitesimalReport::Entry::Status::Passed);

    // a rational-only sample set (an HL-closed situation) passes across the board
    std::vector<std::pair<Rational, ExtendedElement>> rationals;
    for (int k = 2; k <= 9; ++k)
        for (int q = 1; q <= 5; ++q)
            rationals.emplace_back(Rational(q, 2), ExtendedElement::rational(Rational(1, k)));
    auto rep2 = check_q_infinitesimal(spec, rationals, e);
    REQUIRE(rep2.ok);

    REQUIRE_THROWS_AS(
        check_q_infinitesimal(spec, {{Rational(1), ExtendedElement::rational(Rational(2))}}, e),
        std::invalid_argument);
}

TEST_CASE("check_hl_axioms reports the pi counterexample") {
    GeneratorEnclosure e = GeneratorEnclosure::pi();
    std::vector<ExtendedElement> samples = {ExtendedElement::rational(Rational(1, 2)),
                                            ExtendedElement::term(Rational(1, 8), 1)};
    auto rep = check_hl_axioms(samples, e);
    REQUIRE_FALSE(rep.ok());
    REQUIRE(rep.first_violation.has_value());
    REQUIRE(rep.first_violation->axiom == "additive-closure");
    REQUIRE(rep.first_violation->witness == parse_element("1/2 + 1/8*g^1"));
    REQUIRE(rep.first_violation->reason == "two terms");
    // multiplicative closure never fails for single-term members
    for (const auto& v : rep.violations) REQUIRE(v.axiom == "additive-closure");
}

TEST_CASE("check_hl_axioms passes on rational pairs summing below one") {
    GeneratorEnclosure e = GeneratorEnclosure::pi();
    std::vector<ExtendedElement> samples = {ExtendedElement::rational(Rational(1, 4)),
                                            ExtendedElement::rational(Rational(1, 2))};
    auto rep = check_hl_axioms(samples, e);
    REQUIRE(rep.ok());  // 1/4+1/2 = 3/4 member; 1/4+1/4=1/2; 1/2+1/2=1 not < 1: skipped
    REQUIRE(rep.checked_pairs == 3);
}
