#pragma once

// Finite-certificate engine: exhaustive solution enumeration over ground
// sets, backtracking search for avoiding colorings (not-all-equal
// constraints per solution edge), threshold scans over growing ground
// families, and near-zero grid probes.

#include "rado/ground.hpp"
#include "rado/polynomial.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rado {

struct SolutionHypergraph {
    GroundSet ground;
    std::vector<std::vector<int>> tuples;  // index vectors into ground, one per variable
    std::vector<std::vector<int>> edges;   // sorted distinct element indices, deduplicated
    bool has_unit_edge = false;            // some solution uses a single element
};

struct EnumerationOptions {
    unsigned max_vars = 6;          // generic brute-force guard
    uint64_t node_cap = 100'000'000;  // candidate assignments budget
    unsigned threads = 1;
};

namespace detail {

// Per-equation view used during enumeration: terms grouped so that partial
// evaluation by variable prefix is cheap.
struct CompiledPoly {
    const Polynomial* poly;
    int max_var;
};

class Enumerator {
public:
    Enumerator(const PolySystem& sys, const GroundSet& ground, const EnumerationOptions& opts)
        : sys_(sys), ground_(ground), opts_(opts), n_(sys.n_vars()) {
        for (const auto& p : sys.polynomials()) compiled_.push_back({&p, p.max_var()});
    }

    std::vector<std::vector<int>> run() {
        if (ground_.empty()) throw std::invalid_argument("enumerate_solutions: empty ground set");
        if (n_ > opts_.max_vars)
            throw std::invalid_argument("enumerate_solutions: system has " + std::to_string(n_) +
                                        " variables, cap is " + std::to_string(opts_.max_vars));
        if (n_ == 0) return {};
        nodes_.store(0);
        std::vector<int> prefix;
        std::vector<Rational> values;
        prefix.reserve(n_);
        values.reserve(n_);

        auto candidates = candidates_at(0, values);
        unsigned threads = std::max(1u, opts_.threads);
        if (threads == 1 || n_ == 1 || candidates.size() <= 1) {
            std::vector<std::vector<int>> out;
            for (int c : candidates) descend(c, prefix, values, out);
            return out;
        }
        // Parallel over first-coordinate candidates, merged in order.
        size_t chunks = std::min<size_t>(threads, candidates.size());
        std::vector<std::future<std::vector<std::vector<int>>>> futures;
        for (size_t t = 0; t < chunks; ++t) {
            size_t lo = candidates.size() * t / chunks;
            size_t hi = candidates.size() * (t + 1) / chunks;
            std::vector<int> mine(candidates.begin() + static_cast<std::ptrdiff_t>(lo),
                                  candidates.begin() + static_cast<std::ptrdiff_t>(hi));
            futures.push_back(std::async(std::launch::async, [this, mine]() {
                std::vector<std::vector<int>> out;
                std::vector<int> prefix;
                std::vector<Rational> values;
                for (int c : mine) descend(c, prefix, values, out);
                return out;
            }));
        }
        std::vector<std::vector<int>> out;
        for (auto& f : futures) {
            auto part = f.get();
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }

    uint64_t nodes() const { return nodes_.load(); }

private:
    // Candidate ground indices for the variable at `depth` given the prefix
    // assignment: restricted by any equation whose variables all lie in the
    // prefix plus this variable, solved in closed form when the residual
    // univariate polynomial is linear or a pure power.
    std::vector<int> candidates_at(size_t depth, const std::vector<Rational>& values) const {
        std::vector<int> all(ground_.elements.size());
        for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        std::optional<std::vector<int>> restricted;
        for (const auto& cp : compiled_) {
            if (cp.max_var != static_cast<int>(depth)) continue;
            // residual univariate polynomial in x_depth
            UniView uni = substitute_prefix(*cp.poly, depth, values);
            auto cands = solve_or_scan(uni);
            if (!restricted) {
                restricted = std::move(cands);
            } else {
                std::vector<int> merged;
                std::set_intersection(restricted->begin(), restricted->end(), cands.begin(),
                                      cands.end(), std::back_inserter(merged));
                restricted = std::move(merged);
            }
        }
        return restricted ? *restricted : all;
    }

    struct UniView {
        std::vector<std::pair<int, Rational>> coeffs;  // (exponent, coefficient), sparse
    };

    UniView substitute_prefix(const Polynomial& p, size_t depth,
                              const std::vector<Rational>& values) const {
        UniView uni;
        for (const auto& t : p.terms()) {
            Rational c = t.coeff;
            int exp = 0;
            for (const auto& [v, e] : t.powers) {
                if (v == static_cast<int>(depth)) {
                    exp = e;
                } else {
                    c *= rational_pow(values[static_cast<size_t>(v)], static_cast<unsigned>(e));
                }
            }
            bool merged = false;
            for (auto& [ue, uc] : uni.coeffs)
                if (ue == exp) {
                    uc += c;
                    merged = true;
                    break;
                }
            if (!merged) uni.coeffs.emplace_back(exp, c);
        }
        std::erase_if(uni.coeffs, [](const auto& pr) { return pr.second == 0; });
        std::sort(uni.coeffs.begin(), uni.coeffs.end());
        return uni;
    }

    // Ground indices satisfying the univariate equation, ascending.
    std::vector<int> solve_or_scan(const UniView& uni) const {
        if (uni.coeffs.empty()) {  // identically zero: no restriction
            std::vector<int> all(ground_.elements.size());
            for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
            return all;
        }
        if (uni.coeffs.size() == 1) {
            // c x^e = 0 (e >= 1) or nonzero constant: no positive root
            return {};
        }
        if (uni.coeffs.size() == 2 && uni.coeffs[0].first == 0) {
            // c_e x^e + c_0 = 0  =>  x^e = -c_0 / c_e, solved exactly
            const auto& [e0, c0] = uni.coeffs[0];
            const auto& [e1, c1] = uni.coeffs[1];
            Rational target = -c0 / c1;
            auto root = exact_nth_root(target, static_cast<unsigned>(e1));
            if (!root) return {};
            int idx = ground_.index_of(*root);
            if (idx < 0) return {};
            return {idx};
        }
        // general fallback: test every ground element
        std::vector<int> out;
        for (size_t i = 0; i < ground_.elements.size(); ++i) {
            Rational acc(0);
            for (const auto& [e, c] : uni.coeffs)
                acc += c * rational_pow(ground_.elements[i], static_cast<unsigned>(e));
            if (acc == 0) out.push_back(static_cast<int>(i));
        }
        return out;
    }

    void descend(int candidate, std::vector<int> prefix, std::vector<Rational> values,
                 std::vector<std::vector<int>>& out) const {
        prefix.push_back(candidate);
        values.push_back(ground_.elements[static_cast<size_t>(candidate)]);
        charge_node();
        size_t depth = prefix.size();
        if (depth == n_) {
            for (const auto& cp : compiled_)
                if (cp.poly->evaluate(values) != 0) return;
            out.push_back(prefix);
            return;
        }
        for (int next : candidates_at(depth, values)) descend(next, prefix, values, out);
    }

    void charge_node() const {
        uint64_t seen = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (seen > opts_.node_cap)
            throw BudgetError("enumerate_solutions: candidate cap " +
                              std::to_string(opts_.node_cap) + " exceeded");
    }

    const PolySystem& sys_;
    const GroundSet& ground_;
    EnumerationOptions opts_;
    size_t n_;
    std::vector<CompiledPoly> compiled_;
    mutable std::atomic<uint64_t> nodes_{0};
};

}  // namespace detail

// Exactly the tuples over ground^n solving every equation, in lexicographic
// order of their index vectors; edges are the distinct-element sets of the
// tuples, deduplicated.
inline SolutionHypergraph enumerate_solutions(const PolySystem& sys, const GroundSet& ground,
                                              const EnumerationOptions& opts = {}) {
    detail::Enumerator en(sys, ground, opts);
    SolutionHypergraph h;
    h.ground = ground;
    h.tuples = en.run();
    std::set<std::vector<int>> edge_set;
    for (const auto& t : h.tuples) {
        std::vector<int> edge = t;
        std::sort(edge.begin(), edge.end());
        edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
        if (edge.size() == 1) h.has_unit_edge = true;
        edge_set.insert(std::move(edge));
    }
    h.edges.assign(edge_set.begin(), edge_set.end());
    return h;
}

struct SearchStats {
    uint64_t nodes = 0;
    uint64_t backtracks = 0;
};

struct ColoringCertificate {
    unsigned colors = 0;
    std::vector<int> assignment;  // element index -> color in 1..colors
};

struct SearchResult {
    enum class Status { Avoiding, Exhausted, Timeout };
    Status status = Status::Exhausted;
    std::optional<ColoringCertificate> certificate;  // set when Avoiding
    SearchStats stats;
    std::string note;
};

struct SearchOptions {
    std::chrono::milliseconds timeout{0};  // zero = unlimited
};

// Independent re-check: no edge of size >= 2 monochromatic, and no unit
// edges at all.
inline bool verify_coloring(const SolutionHypergraph& h, const ColoringCertificate& cert) {
    if (cert.assignment.size() != h.ground.elements.size()) return false;
    for (int c : cert.assignment)
        if (c < 1 || static_cast<unsigned>(c) > cert.colors) return false;
    for (const auto& edge : h.edges) {
        if (edge.size() == 1) return false;
        bool all_equal = true;
        int first = cert.assignment[static_cast<size_t>(edge[0])];
        for (int el : edge)
            if (cert.assignment[static_cast<size_t>(el)] != first) all_equal = false;
        if (all_equal) return false;
    }
    return true;
}

// Backtracking search for an r-coloring with no monochromatic edge.
// Elements are colored in ascending index order; a new color may only be
// introduced as (max used + 1), which breaks color-permutation symmetry
// without losing completeness. An edge with all but its last element
// colored in one color forbids that color for the last element, which under
// in-order assignment is full unit propagation. Exhausted means the whole
// reduced tree was refuted.
inline SearchResult find_avoiding_coloring(const SolutionHypergraph& h, unsigned r,
                                           const SearchOptions& opts = {}) {
    if (r == 0) throw std::invalid_argument("find_avoiding_coloring: r must be positive");
    SearchResult res;
    const size_t n = h.ground.elements.size();
    if (h.has_unit_edge) {
        res.status = SearchResult::Status::Exhausted;
        res.note = "a solution uses a single element, monochromatic under every coloring";
        return res;
    }
    if (n == 0) {
        res.status = SearchResult::Status::Avoiding;
        res.certificate = ColoringCertificate{r, {}};
        return res;
    }

    // edges indexed by their maximal element, as that is where they close
    std::vector<std::vector<const std::vector<int>*>> closing(n);
    for (const auto& edge : h.edges) closing[static_cast<size_t>(edge.back())].push_back(&edge);

    std::vector<int> color(n, 0);
    const bool timed = opts.timeout.count() > 0;
    const auto deadline = std::chrono::steady_clock::now() + opts.timeout;

    struct Frame {
        int next_color;
        int max_used_before;
    };
    std::vector<Frame> stack;
    stack.reserve(n);
    size_t depth = 0;
    int max_used = 0;
    stack.push_back({1, 0});

    while (true) {
        if (timed && (res.stats.nodes & 0x3ff) == 0 &&
            std::chrono::steady_clock::now() > deadline) {
            res.status = SearchResult::Status::Timeout;
            res.note = "timeout; search tree incomplete";
            return res;
        }
        Frame& f = stack.back();
        int limit = static_cast<int>(std::min<unsigned>(r, static_cast<unsigned>(f.max_used_before) + 1));
        int chosen = 0;
        for (int c = f.next_color; c <= limit; ++c) {
            ++res.stats.nodes;
            bool ok = true;
            for (const auto* edge : closing[depth]) {
                bool mono = true;
                for (size_t k = 0; k + 1 < edge->size(); ++k)
                    if (color[static_cast<size_t>((*edge)[k])] != c) {
                        mono = false;
                        break;
                    }
                if (mono) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen = c;
                f.next_color = c + 1;
                break;
            }
        }
        if (chosen == 0) {
            // exhausted colors at this depth: backtrack
            ++res.stats.backtracks;
            stack.pop_back();
            if (stack.empty()) {
                res.status = SearchResult::Status::Exhausted;
                return res;
            }
            --depth;
            max_used = 0;
            for (size_t i = 0; i < depth; ++i) max_used = std::max(max_used, color[i]);
            continue;
        }
        color[depth] = chosen;
        max_used = std::max(max_used, chosen);
        ++depth;
        if (depth == n) {
            ColoringCertificate cert{r, color};
            SolutionHypergraph check = h;
            if (!verify_coloring(check, cert))
                throw std::logic_error("search produced an invalid avoiding coloring");
            res.status = SearchResult::Status::Avoiding;
            res.certificate = std::move(cert);
            return res;
        }
        stack.push_back({1, max_used});
    }
}

// ---- threshold scans ----------------------------------------------------

struct GroundFamily {
    enum class Kind { IntegerRange, RationalGrid, Geometric };
    Kind kind = Kind::IntegerRange;
    long long denominator = 1;  // RationalGrid
    Rational epsilon;           // RationalGrid / Geometric; 0 = unbounded

    GroundSet at(long long index) const {
        switch (kind) {
            case Kind::IntegerRange:
                return GroundSet::integer_range(index);
            case Kind::RationalGrid:
                return GroundSet::rational_grid(denominator, index,
                                                epsilon == 0 ? Rational(index + 1) : epsilon);
            case Kind::Geometric:
                return GroundSet::geometric(index, epsilon == 0 ? Rational(1) : epsilon);
        }
        throw std::logic_error("unreachable");
    }

    std::string describe() const {
        switch (kind) {
            case Kind::IntegerRange: return "integer ranges {1..N}";
            case Kind::RationalGrid:
                return "rational grids {k/" + std::to_string(denominator) + "}";
            case Kind::Geometric: return "geometric grids {2^-k}";
        }
        return "?";
    }
};

struct RadoNumberReport {
    bool reached = false;
    long long threshold = 0;               // first index with Exhausted
    std::optional<ColoringCertificate> avoiding_before;  // at threshold - 1
    std::optional<SolutionHypergraph> hypergraph_before;
    SearchStats exhausted_stats;
    std::optional<SolutionHypergraph> hypergraph_at;
    long long best_known_avoiding = 0;     // when not reached
    std::string note;
};

// Smallest family index whose hypergraph admits no avoiding r-coloring.
// The family is monotone (each ground set contains the previous), so the
// scan stops at the first Exhausted.
inline RadoNumberReport rado_number(const PolySystem& sys, unsigned r, const GroundFamily& family,
                                    long long max_index, const EnumerationOptions& en_opts = {},
                                    const SearchOptions& s_opts = {}) {
    if (max_index < 1) throw std::invalid_argument("rado_number: max index must be >= 1");
    RadoNumberReport rep;
    std::optional<ColoringCertificate> last_avoiding;
    std::optional<SolutionHypergraph> last_h;
    for (long long idx = 1; idx <= max_index; ++idx) {
        GroundSet g = family.at(idx);
        if (g.empty()) continue;
        SolutionHypergraph h = enumerate_solutions(sys, g, en_opts);
        SearchResult sr = find_avoiding_coloring(h, r, s_opts);
        if (sr.status == SearchResult::Status::Timeout) {
            rep.note = "search timeout at index " + std::to_string(idx);
            rep.best_known_avoiding = idx - 1;
            return rep;
        }
        if (sr.status == SearchResult::Status::Exhausted) {
            rep.reached = true;
            rep.threshold = idx;
            rep.avoiding_before = last_avoiding;
            rep.hypergraph_before = last_h;
            rep.exhausted_stats = sr.stats;
            rep.hypergraph_at = std::move(h);
            if (!sr.note.empty()) rep.note = sr.note;
            return rep;
        }
        last_avoiding = sr.certificate;
        last_h = std::move(h);
        rep.best_known_avoiding = idx;
    }
    rep.note = "no threshold up to index " + std::to_string(max_index);
    return rep;
}

// ---- near-zero probe ----------------------------------------------------

struct NearZeroEntry {
    Rational epsilon;
    size_t grid_size = 0;
    size_t tuple_count = 0;
    SearchResult result;
};

struct NearZeroReport {
    std::vector<NearZeroEntry> entries;
    // One-sided evidence: Exhausted on a finite grid supports solvability in
    // every coloring at that scale; Avoiding refutes nothing about denser
    // sets.
    std::string evidence_note =
        "one-sided finite evidence: Exhausted supports partition regularity at this grid scale; "
        "Avoiding refutes nothing beyond the grid";
};

inline NearZeroReport near_zero_probe(const PolySystem& sys, unsigned r,
                                      const std::vector<Rational>& epsilons, long long d,
                                      long long m, const EnumerationOptions& en_opts = {},
                                      const SearchOptions& s_opts = {}) {
    if (epsilons.empty()) throw std::invalid_argument("near_zero_probe: need epsilons");
    for (size_t i = 0; i < epsilons.size(); ++i) {
        if (epsilons[i] <= 0) throw std::invalid_argument("near_zero_probe: eps must be positive");
        if (i && epsilons[i] >= epsilons[i - 1])
            throw std::invalid_argument("near_zero_probe: epsilons must be strictly decreasing");
    }
    NearZeroReport rep;
    for (const auto& eps : epsilons) {
        GroundSet g = GroundSet::rational_grid(d, m, eps);
        NearZeroEntry entry;
        entry.epsilon = eps;
        entry.grid_size = g.elements.size();
        if (g.empty()) {
            entry.result.status = SearchResult::Status::Avoiding;
            entry.result.certificate = ColoringCertificate{r, {}};
            entry.result.note = "grid empty below epsilon";
        } else {
            SolutionHypergraph h = enumerate_solutions(sys, g, en_opts);
            entry.tuple_count = h.tuples.size();
            entry.result = find_avoiding_coloring(h, r, s_opts);
        }
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

// ---- scaling transfer ----------------------------------------------------

// For a homogeneous system, the hypergraph on g and on lambda*g must agree
// tuple-for-tuple (hence edge-for-edge) under the order-preserving element
// correspondence. Connects integer-range runs with near-zero grid runs.
inline bool scaling_transfer_check(const PolySystem& sys, const Rational& lambda,
                                   const GroundSet& g, const EnumerationOptions& opts = {}) {
    if (!is_homogeneous(sys).homogeneous)
        throw std::invalid_argument("scaling_transfer_check: system is not homogeneous");
    SolutionHypergraph h1 = enumerate_solutions(sys, g, opts);
    SolutionHypergraph h2 = enumerate_solutions(sys, g.scaled(lambda), opts);
    return h1.tuples == h2.tuples && h1.edges == h2.edges;
}

}  // namespace rado
