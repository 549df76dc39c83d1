#pragma once

// Derived systems: the near-zero reciprocal transform, power substitution,
// product-lifted linear forms (lev families), system merges with a linking
// equation, and the AP / finite-sums generator systems.

#include "rado/matrix.hpp"
#include "rado/sturm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rado {

struct TransformReport {
    std::string name;
    PolySystem input;
    PolySystem output;
    // Input variable -> output variable; identity for substitutions.
    std::vector<std::pair<std::string, std::string>> variable_map;
    std::string solution_map;
    std::optional<ConstantSolutionReport> constant_solution;  // reciprocal only
    std::vector<std::string> notes;
};

// Substitutes x_i -> 1/x_i and clears denominators per polynomial by the
// per-variable maximal degree, the least multiplier that makes every term
// polynomial again. On positive tuples the transformed system vanishes
// exactly where the original vanishes at the reciprocal tuple.
inline TransformReport reciprocal_transform(const PolySystem& sys) {
    TransformReport rep;
    rep.name = "reciprocal";
    rep.input = sys;
    PolySystem out(sys.variables());
    for (const auto& p : sys.polynomials()) {
        std::vector<int> top(sys.n_vars(), 0);
        for (size_t v = 0; v < sys.n_vars(); ++v)
            top[v] = p.max_exponent_of(static_cast<int>(v));
        std::vector<Monomial> terms;
        for (const auto& t : p.terms()) {
            Monomial m;
            m.coeff = t.coeff;
            std::vector<int> exp(sys.n_vars(), 0);
            for (size_t v = 0; v < sys.n_vars(); ++v) exp[v] = top[v];
            for (const auto& [v, e] : t.powers) exp[static_cast<size_t>(v)] -= e;
            for (size_t v = 0; v < sys.n_vars(); ++v)
                if (exp[v] > 0) m.powers.emplace_back(static_cast<int>(v), exp[v]);
            terms.push_back(std::move(m));
        }
        out.add_equation(Polynomial::from_terms(std::move(terms)));
    }
    rep.output = std::move(out);
    for (const auto& v : sys.variables()) rep.variable_map.emplace_back(v, v);
    rep.solution_map = "componentwise reciprocal: positive tuple a solves the output iff "
                       "(1/a_1, ..., 1/a_n) solves the input";
    rep.constant_solution = has_constant_positive_solution(sys);
    return rep;
}

// The system A x^r = 0 written out as polynomials in x1, ..., xv.
inline PolySystem power_substitution(const RationalMatrix& a, unsigned r) {
    if (r == 0) throw std::invalid_argument("exponent r must be positive");
    std::vector<std::string> vars;
    for (size_t c = 0; c < a.cols(); ++c) vars.push_back("x" + std::to_string(c + 1));
    PolySystem sys(vars);
    for (size_t i = 0; i < a.rows(); ++i) {
        std::vector<Monomial> terms;
        for (size_t c = 0; c < a.cols(); ++c) {
            if (a.at(i, c) == 0) continue;
            Monomial m;
            m.coeff = a.at(i, c);
            m.powers.emplace_back(static_cast<int>(c), static_cast<int>(r));
            terms.push_back(std::move(m));
        }
        if (terms.empty())
            throw std::invalid_argument("matrix row is identically zero");
        sys.add_equation(Polynomial::from_terms(std::move(terms)));
    }
    return sys;
}

// Coefficients c_1..c_n with index sets F_1..F_n over m auxiliary variables.
struct LevSpec {
    std::vector<Rational> coeffs;       // nonzero, n >= 2
    unsigned m = 0;                     // number of y variables
    std::vector<std::vector<int>> fsets;  // F_i as ascending 0-based y indices

    size_t n() const { return coeffs.size(); }

    void validate() const {
        if (coeffs.size() < 2) throw std::invalid_argument("lev spec needs n >= 2 coefficients");
        for (const auto& c : coeffs)
            if (c == 0) throw std::invalid_argument("lev spec coefficients must be nonzero");
        if (fsets.size() != coeffs.size())
            throw std::invalid_argument("lev spec needs one index set per coefficient");
        for (const auto& f : fsets) {
            int prev = -1;
            for (int j : f) {
                if (j < 0 || j >= static_cast<int>(m))
                    throw std::invalid_argument("lev index set out of range");
                if (j <= prev) throw std::invalid_argument("lev index set must be ascending");
                prev = j;
            }
        }
    }
};

// The polynomial sum_i c_i x_i prod_{j in F_i} y_j over variables
// x1..xn, y1..ym. An empty F_i contributes the bare linear term.
inline PolySystem lev_family(const LevSpec& spec) {
    spec.validate();
    std::vector<std::string> vars;
    for (size_t i = 0; i < spec.n(); ++i) vars.push_back("x" + std::to_string(i + 1));
    for (unsigned j = 0; j < spec.m; ++j) vars.push_back("y" + std::to_string(j + 1));
    PolySystem sys(vars);
    std::vector<Monomial> terms;
    for (size_t i = 0; i < spec.n(); ++i) {
        Monomial t;
        t.coeff = spec.coeffs[i];
        t.powers.emplace_back(static_cast<int>(i), 1);
        for (int j : spec.fsets[i])
            t.powers.emplace_back(static_cast<int>(spec.n()) + j, 1);
        terms.push_back(std::move(t));
    }
    sys.add_equation(Polynomial::from_terms(std::move(terms)));
    return sys;
}

struct MergeOptions {
    // Variables to link with the extra equation; defaults to the first
    // variable of each system.
    std::optional<std::string> link_first;
    std::optional<std::string> link_second;
};

// Concatenates two systems over disjoint variables (clashing names in the
// second system are suffixed) and appends the linking equation
// first_var(sys1) - first_var(sys2).
inline TransformReport merge_systems(const PolySystem& sys1, const PolySystem& sys2,
                                     const MergeOptions& opts = {}) {
    if (sys1.n_vars() == 0 || sys2.n_vars() == 0)
        throw std::invalid_argument("merge requires systems with variables");
    TransformReport rep;
    rep.name = "merge";
    rep.input = sys1;

    PolySystem out(sys1.variables());
    for (const auto& p : sys1.polynomials()) out.add_equation(p);

    std::vector<int> remap(sys2.n_vars(), -1);
    std::vector<std::string> renamed(sys2.n_vars());
    for (size_t v = 0; v < sys2.n_vars(); ++v) {
        std::string name = sys2.variables()[v];
        if (out.find_variable(name) >= 0) {
            int suffix = 2;
            std::string candidate;
            do {
                candidate = name + "_" + std::to_string(suffix++);
            } while (out.find_variable(candidate) >= 0);
            rep.notes.push_back("renamed " + name + " to " + candidate);
            name = candidate;
        }
        renamed[v] = name;
        remap[v] = out.add_variable(name);
    }
    for (const auto& p : sys2.polynomials()) out.add_equation(p.remap_variables(remap));

    std::string link1 = opts.link_first.value_or(sys1.variables().front());
    std::string link2_orig = opts.link_second.value_or(sys2.variables().front());
    int i2 = -1;
    for (size_t v = 0; v < sys2.n_vars(); ++v)
        if (sys2.variables()[v] == link2_orig) i2 = static_cast<int>(v);
    int v1 = out.find_variable(link1);
    if (v1 < 0 || static_cast<size_t>(v1) >= sys1.n_vars())
        throw std::invalid_argument("link variable not in first system: " + link1);
    if (i2 < 0) throw std::invalid_argument("link variable not in second system: " + link2_orig);
    int v2 = remap[static_cast<size_t>(i2)];
    out.add_equation(Polynomial::variable(v1) - Polynomial::variable(v2));

    for (const auto& v : sys1.variables()) rep.variable_map.emplace_back(v, v);
    for (size_t v = 0; v < sys2.n_vars(); ++v)
        rep.variable_map.emplace_back(sys2.variables()[v], renamed[v]);
    rep.solution_map = "solutions restrict to solutions of each input; the linked variables " +
                       link1 + " and " + renamed[static_cast<size_t>(i2)] + " are equal";
    rep.output = std::move(out);
    return rep;
}

// Variables a, d, t1..tk with equations t_i - a - i d: a monochromatic
// solution is an arithmetic progression of length k+1 with its difference.
inline PolySystem ap_system(unsigned k) {
    if (k == 0) throw std::invalid_argument("ap_system needs k >= 1");
    std::vector<std::string> vars = {"a", "d"};
    for (unsigned i = 1; i <= k; ++i) vars.push_back("t" + std::to_string(i));
    PolySystem sys(vars);
    for (unsigned i = 1; i <= k; ++i) {
        Polynomial p = Polynomial::variable(static_cast<int>(1 + i)) - Polynomial::variable(0) -
                       Rational(static_cast<int>(i)) * Polynomial::variable(1);
        sys.add_equation(std::move(p));
    }
    return sys;
}

namespace detail {

inline std::string fs_sum_name(const std::vector<int>& subset, unsigned m) {
    std::string name = "s";
    for (int j : subset) {
        if (m > 9) name += "_";
        name += std::to_string(j + 1);
    }
    return name;
}

}  // namespace detail

// Variables y1..ym plus one sum variable per subset of size >= 2, with
// equations s_F - sum_{j in F} y_j: a monochromatic solution carries all
// finite sums of the y's in one class.
inline PolySystem fs_system(unsigned m) {
    if (m == 0) throw std::invalid_argument("fs_system needs m >= 1");
    if (m > 16) throw std::invalid_argument("fs_system: m too large");
    std::vector<std::string> vars;
    for (unsigned j = 1; j <= m; ++j) vars.push_back("y" + std::to_string(j));
    // subsets of {0..m-1} with |F| >= 2 in the fixed order: size, then lex
    std::vector<std::vector<int>> subsets;
    for (unsigned size = 2; size <= m; ++size) {
        std::vector<int> pick(size);
        for (unsigned i = 0; i < size; ++i) pick[i] = static_cast<int>(i);
        while (true) {
            subsets.push_back(pick);
            int i = static_cast<int>(size) - 1;
            while (i >= 0 && pick[static_cast<size_t>(i)] ==
                                 static_cast<int>(m - size + static_cast<unsigned>(i)))
                --i;
            if (i < 0) break;
            ++pick[static_cast<size_t>(i)];
            for (unsigned j = static_cast<unsigned>(i) + 1; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    PolySystem sys(vars);
    std::vector<int> sum_var(subsets.size());
    for (size_t s = 0; s < subsets.size(); ++s)
        sum_var[s] = sys.add_variable(detail::fs_sum_name(subsets[s], m));
    for (size_t s = 0; s < subsets.size(); ++s) {
        Polynomial p = Polynomial::variable(sum_var[s]);
        for (int j : subsets[s]) p = p - Polynomial::variable(j);
        sys.add_equation(std::move(p));
    }
    return sys;
}

// Substitutes `drop` by `keep` everywhere and removes `drop` from the
// variable list. Used to identify two variables of a constructed family.
inline PolySystem identify_variables(const PolySystem& sys, const std::string& keep,
                                     const std::string& drop) {
    int vk = sys.find_variable(keep), vd = sys.find_variable(drop);
    if (vk < 0 || vd < 0) throw std::invalid_argument("identify_variables: unknown variable");
    if (vk == vd) return sys;
    std::vector<std::string> vars;
    std::vector<int> remap(sys.n_vars(), -1);
    for (size_t v = 0; v < sys.n_vars(); ++v) {
        if (static_cast<int>(v) == vd) continue;
        remap[v] = static_cast<int>(vars.size());
        vars.push_back(sys.variables()[v]);
    }
    remap[static_cast<size_t>(vd)] = remap[static_cast<size_t>(vk)];
    PolySystem out(vars);
    for (const auto& p : sys.polynomials()) out.add_equation(p.remap_variables(remap));
    return out;
}

}  // namespace rado
