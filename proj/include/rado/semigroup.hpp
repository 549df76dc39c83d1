#pragma once

// Symbolic arithmetic in Q-linear extensions by a formal transcendental
// generator g, plus decidable membership for the multiplicative semigroup
// { q g^z : q in Q+, z >= 0 } intersected with (0,1). Because g is
// transcendental, coefficientwise equality of the formal combinations is
// complete; numeric questions are only ever comparisons against rationals,
// answered through a nested rational enclosure of g.

#include "rado/rational.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace rado {

// Finite sum  sum_z q_z g^z  with nonzero rational coefficients.
class ExtendedElement {
public:
    ExtendedElement() = default;

    static ExtendedElement term(const Rational& coeff, unsigned exponent) {
        ExtendedElement e;
        if (coeff != 0) e.terms_[exponent] = coeff;
        return e;
    }

    static ExtendedElement rational(const Rational& q) { return term(q, 0); }

    const std::map<unsigned, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t n_terms() const { return terms_.size(); }

    // The (exponent, coefficient) pair when the element is a single term.
    std::optional<std::pair<unsigned, Rational>> single_term() const {
        if (terms_.size() != 1) return std::nullopt;
        return *terms_.begin();
    }

    bool is_rational_one() const {
        auto t = single_term();
        return t && t->first == 0 && t->second == 1;
    }

    bool all_coefficients_positive() const {
        for (const auto& [z, q] : terms_)
            if (q <= 0) return false;
        return !terms_.empty();
    }

    unsigned max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    friend ExtendedElement operator+(const ExtendedElement& a, const ExtendedElement& b) {
        ExtendedElement r = a;
        for (const auto& [z, q] : b.terms_) {
            auto [it, inserted] = r.terms_.try_emplace(z, q);
            if (!inserted) {
                it->second += q;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
        return r;
    }

    friend ExtendedElement operator-(const ExtendedElement& a) {
        ExtendedElement r = a;
        for (auto& [z, q] : r.terms_) q = -q;
        return r;
    }

    friend ExtendedElement operator-(const ExtendedElement& a, const ExtendedElement& b) {
        return a + (-b);
    }

    friend ExtendedElement operator*(const ExtendedElement& a, const ExtendedElement& b) {
        ExtendedElement r;
        for (const auto& [za, qa] : a.terms_)
            for (const auto& [zb, qb] : b.terms_) {
                unsigned z = za + zb;
                Rational prod = qa * qb;
                auto [it, inserted] = r.terms_.try_emplace(z, prod);
                if (!inserted) {
                    it->second += prod;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        return r;
    }

    friend ExtendedElement operator*(const Rational& c, const ExtendedElement& a) {
        ExtendedElement r;
        if (c == 0) return r;
        r.terms_ = a.terms_;
        for (auto& [z, q] : r.terms_) q *= c;
        return r;
    }

    friend bool operator==(const ExtendedElement&, const ExtendedElement&) = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [z, q] : terms_) {
            Rational mag = rational_abs(q);
            if (q < 0)
                os << (first ? "-" : " - ");
            else if (!first)
                os << " + ";
            if (z == 0) {
                os << to_string(mag);
            } else {
                if (mag != 1) os << to_string(mag) << "*";
                os << "g^" << z;
            }
            first = false;
        }
        return os.str();
    }

private:
    std::map<unsigned, Rational> terms_;
};

// Parses element literals like "1/2 + 1/8*g^1", "g^2", "3*g", "-2/3".
inline ExtendedElement parse_element(std::string_view text) {
    ExtendedElement out;
    size_t i = 0;
    const size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto parse_uint = [&](const char* what) {
        skip_ws();
        size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i)
            throw std::invalid_argument(std::string("expected ") + what + " at offset " +
                                        std::to_string(start));
        return std::string(text.substr(start, i - start));
    };
    skip_ws();
    if (i == n) throw std::invalid_argument("empty element literal");
    bool first = true;
    while (true) {
        skip_ws();
        int sgn = 1;
        if (i < n && (text[i] == '+' || text[i] == '-')) {
            if (first && text[i] == '+')
                throw std::invalid_argument("unexpected leading '+'");
            sgn = (text[i] == '-') ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' between terms at offset " +
                                        std::to_string(i));
        }
        first = false;
        Rational coeff(1);
        bool saw_coeff = false;
        if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::string num = parse_uint("numerator");
            if (i < n && text[i] == '/') {
                ++i;
                std::string den = parse_uint("denominator");
                if (Integer(den) == 0) throw std::invalid_argument("zero denominator");
                num += "/" + den;
            }
            coeff = parse_rational(num);
            saw_coeff = true;
        }
        unsigned exponent = 0;
        skip_ws();
        bool star = false;
        if (i < n && text[i] == '*') {
            ++i;
            skip_ws();
            star = true;
        }
        if (i < n && text[i] == 'g') {
            ++i;
            exponent = 1;
            if (i < n && text[i] == '^') {
                ++i;
                exponent = static_cast<unsigned>(std::stoul(parse_uint("exponent")));
            }
        } else {
            if (star) throw std::invalid_argument("expected 'g' after '*'");
            if (!saw_coeff)
                throw std::invalid_argument("expected coefficient or 'g' at offset " +
                                            std::to_string(i));
        }
        out = out + ExtendedElement::term(sgn < 0 ? Rational(-coeff) : coeff, exponent);
        skip_ws();
        if (i == n) break;
        if (text[i] != '+' && text[i] != '-')
            throw std::invalid_argument("unexpected character at offset " + std::to_string(i));
    }
    return out;
}

// Nested rational enclosure of the generator's numeric value (pi). Each
// refine() call shrinks the interval width by at least a factor of two and
// keeps the new interval inside the old one. The bounds come from Machin's
// series 16 arctan(1/5) - 4 arctan(1/239) with alternating-series error
// bounds on both arctangents.
class GeneratorEnclosure {
public:
    static GeneratorEnclosure pi() { return GeneratorEnclosure(); }

    const Rational& lower() const { return lo_; }
    const Rational& upper() const { return hi_; }
    Rational width() const { return hi_ - lo_; }

    void refine() {
        Rational target = width() / 2;
        while (width() > target) {
            ++terms_;
            auto [alo, ahi] = arctan_inv_enclosure(5, terms_);
            auto [blo, bhi] = arctan_inv_enclosure(239, terms_);
            Rational new_lo = 16 * alo - 4 * bhi;
            Rational new_hi = 16 * ahi - 4 * blo;
            // intersect with the current interval to stay nested
            lo_ = std::max(lo_, new_lo);
            hi_ = std::min(hi_, new_hi);
            if (lo_ > hi_) throw std::logic_error("enclosure refinement produced empty interval");
        }
    }

private:
    GeneratorEnclosure() : lo_(3), hi_(22, 7) {}

    // [sum - bound, sum + bound] encloses arctan(1/x) after k terms.
    static std::pair<Rational, Rational> arctan_inv_enclosure(unsigned x, unsigned k) {
        Rational sum(0);
        Rational xi(1, x);
        Rational x2 = xi * xi;
        Rational pow = xi;
        for (unsigned t = 0; t < k; ++t) {
            Rational term = pow / (2 * t + 1);
            sum += (t % 2 == 0) ? term : -term;
            pow *= x2;
        }
        Rational bound = pow / (2 * k + 1);
        return {sum - bound, sum + bound};
    }

    Rational lo_, hi_;
    unsigned terms_ = 0;
};

enum class Ordering { Less, Equal, Greater };

// Interval evaluation of an element over g in [lo, hi] with lo > 0.
inline std::pair<Rational, Rational> interval_value(const ExtendedElement& x, const Rational& lo,
                                                    const Rational& hi) {
    Rational vlo(0), vhi(0);
    for (const auto& [z, q] : x.terms()) {
        Rational plo = rational_pow(lo, z), phi = rational_pow(hi, z);
        if (q >= 0) {
            vlo += q * plo;
            vhi += q * phi;
        } else {
            vlo += q * phi;
            vhi += q * plo;
        }
    }
    return {vlo, vhi};
}

// Compares the numeric value of x against 1. Equal is only possible for the
// symbolic rational 1 (a nontrivial combination of powers of a
// transcendental generator never equals a rational), so for all other
// inputs the enclosure is refined until it separates x from 1.
inline Ordering compare_to_one(const ExtendedElement& x, GeneratorEnclosure& e,
                               unsigned max_rounds = 64) {
    if (x.is_rational_one()) return Ordering::Equal;
    for (unsigned round = 0; round <= max_rounds; ++round) {
        auto [lo, hi] = interval_value(x, e.lower(), e.upper());
        if (hi < 1) return Ordering::Less;
        if (lo > 1) return Ordering::Greater;
        if (round == max_rounds) break;
        e.refine();
    }
    throw BudgetError("compare_to_one: refinement cap reached with g in [" +
                      to_string(e.lower()) + ", " + to_string(e.upper()) + "]");
}

struct SemigroupSpec {
    enum class Kind { PiStyleMultiplicative };
    Kind kind = Kind::PiStyleMultiplicative;
};

struct MembershipResult {
    bool member = false;
    std::string reason;
};

// Membership in { q g^z : q in Q+, z >= 0 } intersected with (0,1):
// exactly one term, positive coefficient, value below one.
inline MembershipResult membership(const ExtendedElement& x, const SemigroupSpec&,
                                   GeneratorEnclosure& e) {
    if (x.is_zero()) return {false, "zero element"};
    if (x.n_terms() >= 2)
        return {false, x.n_terms() == 2 ? "two terms" : "more than two terms"};
    auto [z, q] = *x.single_term();
    if (q < 0) return {false, "negative coefficient"};
    Ordering ord = compare_to_one(x, e);
    if (ord == Ordering::Equal) return {false, "equal to one"};
    if (ord == Ordering::Greater) return {false, "not below one"};
    return {true, "single term q*g^" + std::to_string(z) + " with q > 0, value below one"};
}

struct QInfinitesimalReport {
    struct Entry {
        Rational q;
        ExtendedElement x;
        ExtendedElement qx;
        enum class Status { Passed, Skipped, Violation } status;
        std::string detail;
    };
    std::vector<Entry> entries;
    bool ok = true;
};

// For each sample pair (q, x) with q x < 1, membership of q x is asserted.
// Pairs with q x >= 1 fall outside the axiom's premise and are skipped.
inline QInfinitesimalReport check_q_infinitesimal(
    const SemigroupSpec& spec, const std::vector<std::pair<Rational, ExtendedElement>>& samples,
    GeneratorEnclosure& e) {
    QInfinitesimalReport rep;
    for (const auto& [q, x] : samples) {
        if (q <= 0) throw std::invalid_argument("check_q_infinitesimal: q must be positive");
        auto mx = membership(x, spec, e);
        if (!mx.member)
            throw std::invalid_argument("check_q_infinitesimal: sample not a member: " + x.str());
        QInfinitesimalReport::Entry entry{q, x, q * x, QInfinitesimalReport::Entry::Status::Passed,
                                          ""};
        Ordering ord = compare_to_one(entry.qx, e);
        if (ord != Ordering::Less) {
            entry.status = QInfinitesimalReport::Entry::Status::Skipped;
            entry.detail = "q*x is not below one; axiom premise unmet";
        } else {
            auto m = membership(entry.qx, spec, e);
            if (!m.member) {
                entry.status = QInfinitesimalReport::Entry::Status::Violation;
                entry.detail = m.reason;
                rep.ok = false;
            }
        }
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

struct HlViolation {
    std::string axiom;  // "additive-closure" or "multiplicative-closure"
    size_t i, j;        // sample indices
    ExtendedElement witness;
    std::string reason;
};

struct HlReport {
    size_t checked_pairs = 0;
    std::vector<HlViolation> violations;
    std::optional<HlViolation> first_violation;
    bool ok() const { return violations.empty(); }
};

// Tests the closure properties an HL-style ambient semigroup would impose
// on the samples: for every pair, if x + y (resp. x * y) lands in (0,1)
// numerically, it must be a member. For the pi-style semigroup the additive
// check fails on rational-plus-generator pairs; that witness is reported.
inline HlReport check_hl_axioms(const std::vector<ExtendedElement>& samples,
                                GeneratorEnclosure& e) {
    SemigroupSpec spec;
    HlReport rep;
    for (const auto& x : samples) {
        auto m = membership(x, spec, e);
        if (!m.member)
            throw std::invalid_argument("check_hl_axioms: sample not a member: " + x.str());
    }
    auto record = [&rep](HlViolation v) {
        if (!rep.first_violation) rep.first_violation = v;
        rep.violations.push_back(std::move(v));
    };
    for (size_t i = 0; i < samples.size(); ++i) {
        for (size_t j = i; j < samples.size(); ++j) {
            ++rep.checked_pairs;
            ExtendedElement sum = samples[i] + samples[j];
            // members have positive coefficients, so the sum is positive
            if (compare_to_one(sum, e) == Ordering::Less) {
                auto m = membership(sum, spec, e);
                if (!m.member)
                    record({"additive-closure", i, j, sum, m.reason});
            }
            ExtendedElement prod = samples[i] * samples[j];
            if (compare_to_one(prod, e) == Ordering::Less) {
                auto m = membership(prod, spec, e);
                if (!m.member)
                    record({"multiplicative-closure", i, j, prod, m.reason});
            }
        }
    }
    return rep;
}

}  // namespace rado
