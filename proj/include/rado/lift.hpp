#pragma once

// Constructive lifting of linear solutions to solutions of lev-family
// polynomials: d_i = a_i * prod_{j not in F_i} b_j. The telescoping
// identity sum_i c_i d_i prod_{j in F_i} b_j = (prod_j b_j)(sum_i c_i a_i)
// makes (d, b) an exact solution whenever sum_i c_i a_i = 0.

#include "rado/transforms.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace rado {

struct LiftInstance {
    LevSpec spec;
    std::vector<Rational> linear_solution;  // a_1..a_n, positive, sum c_i a_i = 0
    std::vector<Rational> multipliers;      // b_1..b_m, positive

    void validate() const {
        spec.validate();
        if (linear_solution.size() != spec.n())
            throw std::invalid_argument("lift: solution length must match coefficient count");
        if (multipliers.size() != spec.m)
            throw std::invalid_argument("lift: multiplier count must match m");
        for (const auto& a : linear_solution)
            if (a <= 0) throw std::invalid_argument("lift: solution entries must be positive");
        for (const auto& b : multipliers)
            if (b <= 0) throw std::invalid_argument("lift: multipliers must be positive");
        Rational s(0);
        for (size_t i = 0; i < spec.n(); ++i) s += spec.coeffs[i] * linear_solution[i];
        if (s != 0)
            throw std::invalid_argument("lift: linear solution does not satisfy sum c_i a_i = 0");
    }
};

// Returns d_1..d_n and checks the telescoping identity exactly; a failure
// there would be an implementation bug, not bad input.
inline std::vector<Rational> lift(const LiftInstance& inst) {
    inst.validate();
    const size_t n = inst.spec.n();
    const unsigned m = inst.spec.m;
    std::vector<Rational> d(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<char> in_f(m, 0);
        for (int j : inst.spec.fsets[i]) in_f[static_cast<size_t>(j)] = 1;
        Rational prod(1);
        for (unsigned j = 0; j < m; ++j)
            if (!in_f[j]) prod *= inst.multipliers[j];
        d[i] = inst.linear_solution[i] * prod;
    }
    // sum_i c_i d_i prod_{j in F_i} b_j must vanish
    Rational total(0);
    for (size_t i = 0; i < n; ++i) {
        Rational prod(1);
        for (int j : inst.spec.fsets[i]) prod *= inst.multipliers[static_cast<size_t>(j)];
        total += inst.spec.coeffs[i] * d[i] * prod;
    }
    if (total != 0) throw std::logic_error("lift: telescoping identity violated");
    // and the lev polynomial itself evaluates to zero at (d, b)
    PolySystem fam = lev_family(inst.spec);
    std::vector<Rational> point = d;
    point.insert(point.end(), inst.multipliers.begin(), inst.multipliers.end());
    if (fam.poly(0).evaluate(point) != 0)
        throw std::logic_error("lift: lev polynomial nonzero at lifted point");
    return d;
}

// Finite inclusion chain B_0 >= B_1 >= ... >= B_m, each a set of rationals.
struct NestedChain {
    std::vector<std::vector<Rational>> sets;  // sorted ascending, deduplicated

    static NestedChain from_sets(std::vector<std::vector<Rational>> raw) {
        NestedChain chain;
        chain.sets = std::move(raw);
        for (auto& s : chain.sets) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
        }
        for (size_t k = 1; k < chain.sets.size(); ++k)
            if (!std::includes(chain.sets[k - 1].begin(), chain.sets[k - 1].end(),
                               chain.sets[k].begin(), chain.sets[k].end()))
                throw std::invalid_argument("nested chain: set " + std::to_string(k) +
                                            " is not contained in its predecessor");
        if (chain.sets.empty()) throw std::invalid_argument("nested chain: needs at least B_0");
        return chain;
    }

    size_t depth() const { return sets.size() - 1; }  // m

    bool contains(size_t level, const Rational& x) const {
        const auto& s = sets.at(level);
        return std::binary_search(s.begin(), s.end(), x);
    }
};

struct ChainReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks the membership claims produced by the lifting construction:
//   (1) b_k in B_{m-k} for k = 1..m
//   (2) a_i * prod_{j in G} b_j in B_{m - max G} for all i, G subset of
//       {1..m}, with prod over the empty set 1 and max of the empty set 0.
inline ChainReport verify_chain(const NestedChain& chain, const std::vector<Rational>& a,
                                const std::vector<Rational>& b) {
    const size_t m = chain.depth();
    if (b.size() != m)
        throw std::invalid_argument("verify_chain: |b| must equal the chain depth");
    ChainReport rep;
    auto fail = [&rep](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    for (size_t k = 1; k <= m; ++k) {
        if (!chain.contains(m - k, b[k - 1]))
            fail("b_" + std::to_string(k) + " = " + to_string(b[k - 1]) + " not in B_" +
                 std::to_string(m - k));
    }
    const size_t subsets = size_t{1} << m;
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t mask = 0; mask < subsets; ++mask) {
            Rational prod(1);
            size_t max_g = 0;  // max of empty G is 0
            for (size_t j = 0; j < m; ++j)
                if (mask & (size_t{1} << j)) {
                    prod *= b[j];
                    max_g = j + 1;
                }
            Rational value = a[i] * prod;
            size_t level = m - max_g;
            if (!chain.contains(level, value)) {
                std::string gtxt = "{";
                for (size_t j = 0; j < m; ++j)
                    if (mask & (size_t{1} << j)) gtxt += (gtxt.size() > 1 ? "," : "") + std::to_string(j + 1);
                gtxt += "}";
                fail("a_" + std::to_string(i + 1) + " * prod(G=" + gtxt + ") = " + to_string(value) +
                     " not in B_" + std::to_string(level));
            }
        }
    }
    return rep;
}

struct LiftWitness {
    std::vector<Rational> a;
    std::vector<Rational> b;
    std::vector<Rational> d;
};

// Exhaustive search over a finite set: a in A^n with sum c_i a_i = 0, then
// b in A^m with every lifted d_i in A. Candidates are scanned in
// lexicographic order over A sorted ascending; the first witness wins and
// is re-verified through lift().
inline std::optional<LiftWitness> find_lift_in_set(const std::vector<Rational>& ground,
                                                   const LevSpec& spec,
                                                   uint64_t node_cap = 100'000'000) {
    spec.validate();
    if (ground.empty()) throw std::invalid_argument("find_lift_in_set: empty set");
    std::vector<Rational> a_sorted = ground;
    std::sort(a_sorted.begin(), a_sorted.end());
    a_sorted.erase(std::unique(a_sorted.begin(), a_sorted.end()), a_sorted.end());
    for (const auto& x : a_sorted)
        if (x <= 0) throw std::invalid_argument("find_lift_in_set: set must be positive");

    const size_t n = spec.n();
    const unsigned m = spec.m;
    const size_t size = a_sorted.size();
    uint64_t nodes = 0;

    std::vector<size_t> ai(n, 0);
    auto in_set = [&](const Rational& x) {
        return std::binary_search(a_sorted.begin(), a_sorted.end(), x);
    };

    while (true) {
        if (++nodes > node_cap)
            throw BudgetError("find_lift_in_set: node cap " + std::to_string(node_cap) +
                              " exceeded");
        Rational s(0);
        for (size_t i = 0; i < n; ++i) s += spec.coeffs[i] * a_sorted[ai[i]];
        if (s == 0) {
            std::vector<size_t> bi(m, 0);
            bool more_b = true;
            while (more_b) {
                if (++nodes > node_cap)
                    throw BudgetError("find_lift_in_set: node cap " + std::to_string(node_cap) +
                                      " exceeded");
                LiftInstance inst;
                inst.spec = spec;
                for (size_t i = 0; i < n; ++i) inst.linear_solution.push_back(a_sorted[ai[i]]);
                for (unsigned j = 0; j < m; ++j) inst.multipliers.push_back(a_sorted[bi[j]]);
                std::vector<Rational> d = lift(inst);
                bool all_in = true;
                for (const auto& x : d)
                    if (!in_set(x)) all_in = false;
                if (all_in) {
                    LiftWitness w;
                    w.a = inst.linear_solution;
                    w.b = inst.multipliers;
                    w.d = std::move(d);
                    return w;
                }
                // next b tuple in lexicographic order
                more_b = false;
                for (size_t j = m; j-- > 0;) {
                    if (++bi[j] < size) {
                        more_b = true;
                        break;
                    }
                    bi[j] = 0;
                }
                if (m == 0) break;  // single empty multiplier tuple
            }
        }
        // next a tuple
        bool more_a = false;
        for (size_t i = n; i-- > 0;) {
            if (++ai[i] < size) {
                more_a = true;
                break;
            }
            ai[i] = 0;
        }
        if (!more_a) return std::nullopt;
    }
}

}  // namespace rado
