#pragma once

// Sparse multivariate polynomials over exact rationals, and the polynomial
// systems built from them. Structural equality of the canonical form is
// mathematical equality: terms are kept sorted by total degree (ascending),
// ties broken lexicographically (descending) against the owning system's
// variable order, like terms merged, zero coefficients dropped.

#include "rado/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace rado {

// Coefficient together with a product of variable powers. Variables are
// indices into the owning PolySystem's variable list; exponents are > 0.
struct Monomial {
    Rational coeff;
    std::vector<std::pair<int, int>> powers;  // (variable, exponent), variable ascending

    int total_degree() const {
        int d = 0;
        for (const auto& [v, e] : powers) d += e;
        return d;
    }

    int exponent_of(int var) const {
        for (const auto& [v, e] : powers)
            if (v == var) return e;
        return 0;
    }

    int max_var() const { return powers.empty() ? -1 : powers.back().first; }

    bool same_powers(const Monomial& other) const { return powers == other.powers; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Term order: total degree ascending, then lexicographic descending on the
// exponent vector. Returns true if a precedes b.
inline bool monomial_key_before(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    size_t i = 0, j = 0;
    while (i < a.powers.size() && j < b.powers.size()) {
        const auto& [va, ea] = a.powers[i];
        const auto& [vb, eb] = b.powers[j];
        if (va != vb) return va < vb;  // earlier variable with positive exponent wins
        if (ea != eb) return ea > eb;
        ++i, ++j;
    }
    // Equal prefixes; one exhausted. Same total degree forces both exhausted.
    return false;
}

class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }

    static Polynomial constant(Rational c) {
        Polynomial p;
        if (c != 0) p.terms_.push_back(Monomial{std::move(c), {}});
        return p;
    }

    static Polynomial variable(int var, int exp = 1) {
        Polynomial p;
        if (exp < 0) throw std::invalid_argument("negative exponent");
        if (exp == 0) return constant(Rational(1));
        p.terms_.push_back(Monomial{Rational(1), {{var, exp}}});
        return p;
    }

    static Polynomial from_terms(std::vector<Monomial> terms) {
        Polynomial p;
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].powers.empty());
    }

    int max_var() const {
        int m = -1;
        for (const auto& t : terms_) m = std::max(m, t.max_var());
        return m;
    }

    int max_exponent_of(int var) const {
        int m = 0;
        for (const auto& t : terms_) m = std::max(m, t.exponent_of(var));
        return m;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        r.terms_ = a.terms_;
        r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
        r.normalize();
        return r;
    }

    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r = a;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        r.terms_.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) r.terms_.push_back(mul_terms(ta, tb));
        r.normalize();
        return r;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial r;
        if (c == 0) return r;
        r.terms_ = p.terms_;
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(Rational(1));
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    Rational evaluate(const std::vector<Rational>& values) const {
        Rational sum(0);
        for (const auto& t : terms_) {
            Rational prod = t.coeff;
            for (const auto& [v, e] : t.powers) {
                if (v < 0 || static_cast<size_t>(v) >= values.size())
                    throw std::invalid_argument("assignment does not cover variable");
                prod *= rational_pow(values[v], static_cast<unsigned>(e));
            }
            sum += prod;
        }
        return sum;
    }

    // Remaps variable indices. The map must be total on the variables used.
    Polynomial remap_variables(const std::vector<int>& new_index) const {
        Polynomial r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) {
            for (auto& [v, e] : t.powers) {
                if (v < 0 || static_cast<size_t>(v) >= new_index.size() || new_index[v] < 0)
                    throw std::invalid_argument("remap does not cover variable");
                v = new_index[v];
            }
            std::sort(t.powers.begin(), t.powers.end());
            merge_adjacent_powers(t);
        }
        r.normalize();
        return r;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    static Monomial mul_terms(const Monomial& a, const Monomial& b) {
        Monomial m;
        m.coeff = a.coeff * b.coeff;
        size_t i = 0, j = 0;
        while (i < a.powers.size() || j < b.powers.size()) {
            if (j == b.powers.size() || (i < a.powers.size() && a.powers[i].first < b.powers[j].first))
                m.powers.push_back(a.powers[i++]);
            else if (i == a.powers.size() || b.powers[j].first < a.powers[i].first)
                m.powers.push_back(b.powers[j++]);
            else {
                m.powers.emplace_back(a.powers[i].first, a.powers[i].second + b.powers[j].second);
                ++i, ++j;
            }
        }
        return m;
    }

    static void merge_adjacent_powers(Monomial& t) {
        std::vector<std::pair<int, int>> merged;
        for (const auto& [v, e] : t.powers) {
            if (!merged.empty() && merged.back().first == v)
                merged.back().second += e;
            else
                merged.emplace_back(v, e);
        }
        t.powers = std::move(merged);
    }

    void normalize() {
        for (auto& t : terms_) {
            std::erase_if(t.powers, [](const auto& p) { return p.second == 0; });
            std::sort(t.powers.begin(), t.powers.end());
            merge_adjacent_powers(t);
        }
        std::sort(terms_.begin(), terms_.end(),
                  [](const Monomial& a, const Monomial& b) { return monomial_key_before(a, b); });
        std::vector<Monomial> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().same_powers(t))
                out.back().coeff += t.coeff;
            else
                out.push_back(std::move(t));
        }
        std::erase_if(out, [](const Monomial& t) { return t.coeff == 0; });
        terms_ = std::move(out);
    }

    std::vector<Monomial> terms_;
};

// Ordered list of polynomials over a shared ordered variable list.
class PolySystem {
public:
    PolySystem() = default;

    explicit PolySystem(std::vector<std::string> variables) : vars_(std::move(variables)) {}

    PolySystem(std::vector<std::string> variables, std::vector<Polynomial> polynomials)
        : vars_(std::move(variables)), polys_(std::move(polynomials)) {
        for (const auto& p : polys_) validate_equation(p);
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const std::vector<Polynomial>& polynomials() const { return polys_; }
    size_t n_vars() const { return vars_.size(); }
    size_t n_polys() const { return polys_.size(); }
    const Polynomial& poly(size_t i) const { return polys_.at(i); }

    int find_variable(std::string_view name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }

    int add_variable(const std::string& name) {
        int idx = find_variable(name);
        if (idx >= 0) return idx;
        vars_.push_back(name);
        return static_cast<int>(vars_.size()) - 1;
    }

    void add_equation(Polynomial p) {
        validate_equation(p);
        polys_.push_back(std::move(p));
    }

    friend bool operator==(const PolySystem&, const PolySystem&) = default;

private:
    void validate_equation(const Polynomial& p) const {
        if (p.is_zero()) throw std::invalid_argument("equation identically zero");
        if (p.max_var() >= static_cast<int>(vars_.size()))
            throw std::invalid_argument("polynomial uses variable outside the system's list");
    }

    std::vector<std::string> vars_;
    std::vector<Polynomial> polys_;
};

using Assignment = std::map<std::string, Rational>;

// ---- printing ---------------------------------------------------------

inline std::string monomial_to_string(const Monomial& t, const std::vector<std::string>& vars,
                                      bool leading) {
    std::ostringstream os;
    Rational c = rational_abs(t.coeff);
    if (t.coeff < 0)
        os << (leading ? "-" : " - ");
    else if (!leading)
        os << " + ";
    bool need_coeff = (c != 1) || t.powers.empty();
    if (need_coeff) os << to_string(c);
    bool first_factor = !need_coeff;
    for (const auto& [v, e] : t.powers) {
        if (!first_factor) os << "*";
        first_factor = false;
        os << vars.at(static_cast<size_t>(v));
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

inline std::string polynomial_to_string(const Polynomial& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (const auto& t : p.terms()) {
        out += monomial_to_string(t, vars, leading);
        leading = false;
    }
    return out;
}

inline std::string system_to_string(const PolySystem& sys) {
    std::string out;
    for (size_t i = 0; i < sys.n_polys(); ++i) {
        if (i) out += "; ";
        out += polynomial_to_string(sys.poly(i), sys.variables());
    }
    return out;
}

// ---- evaluation -------------------------------------------------------

inline std::vector<Rational> assignment_values(const PolySystem& sys, const Assignment& a) {
    std::vector<Rational> values;
    values.reserve(sys.n_vars());
    for (const auto& name : sys.variables()) {
        auto it = a.find(name);
        if (it == a.end()) throw std::invalid_argument("missing variable binding: " + name);
        values.push_back(it->second);
    }
    return values;
}

inline std::vector<Rational> evaluate(const PolySystem& sys, const Assignment& a) {
    std::vector<Rational> values = assignment_values(sys, a);
    std::vector<Rational> out;
    out.reserve(sys.n_polys());
    for (const auto& p : sys.polynomials()) out.push_back(p.evaluate(values));
    return out;
}

inline bool is_solution(const PolySystem& sys, const Assignment& a) {
    for (const auto& v : evaluate(sys, a))
        if (v != 0) return false;
    return true;
}

// ---- homogeneity ------------------------------------------------------

struct HomogeneityReport {
    bool homogeneous = true;
    std::vector<int> degrees;  // per polynomial; meaningful when homogeneous
    // First offending polynomial and the two distinct monomial degrees found.
    int failing_poly = -1;
    int degree_a = -1, degree_b = -1;
};

// Syntactic check: every monomial of every polynomial has the same total
// degree. This implies invariance of the solution set under positive
// scaling; the converse is not decided here.
inline HomogeneityReport is_homogeneous(const PolySystem& sys) {
    HomogeneityReport rep;
    for (size_t i = 0; i < sys.n_polys(); ++i) {
        const auto& terms = sys.poly(i).terms();
        int d = terms.empty() ? 0 : terms.front().total_degree();
        for (const auto& t : terms) {
            if (t.total_degree() != d) {
                rep.homogeneous = false;
                rep.failing_poly = static_cast<int>(i);
                rep.degree_a = d;
                rep.degree_b = t.total_degree();
                return rep;
            }
        }
        rep.degrees.push_back(d);
    }
    return rep;
}

}  // namespace rado
