#pragma once

// Columns-condition decider with machine-checkable certificates.
//
// A u x v rational matrix satisfies the columns condition when its columns
// admit an ordered partition I_1, ..., I_m such that the columns of I_1 sum
// to zero and each later block's sum is a rational combination of the
// columns in earlier blocks. This is the classical criterion for a linear
// system A x = 0 to be partition regular. The search is complete: blocks
// are tried in a fixed order (subsets by increasing size, then
// lexicographic), so the first certificate found is deterministic.

#include "rado/matrix.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace rado {

struct ColumnsCertificate {
    // Ordered partition of column indices (0-based).
    std::vector<std::vector<int>> blocks;
    // For each block t >= 2 (index into blocks), coefficients expressing the
    // block's column sum over columns of earlier blocks. Zero coefficients
    // are omitted.
    struct Witness {
        int block;
        std::vector<std::pair<int, Rational>> combination;
    };
    std::vector<Witness> witnesses;
};

namespace detail {

// Subsets of `pool` (ascending indices) in the fixed enumeration order:
// increasing size, then lexicographic on the index list.
class SubsetEnumerator {
public:
    explicit SubsetEnumerator(std::vector<int> pool) : pool_(std::move(pool)) {}

    template <typename F>
    bool for_each(F&& f) const {  // stops and returns true when f returns true
        const size_t n = pool_.size();
        std::vector<int> pick;
        for (size_t size = 1; size <= n; ++size) {
            pick.assign(size, 0);
            for (size_t i = 0; i < size; ++i) pick[i] = static_cast<int>(i);
            while (true) {
                std::vector<int> subset(size);
                for (size_t i = 0; i < size; ++i) subset[i] = pool_[static_cast<size_t>(pick[i])];
                if (f(subset)) return true;
                // next combination
                int i = static_cast<int>(size) - 1;
                while (i >= 0 && pick[static_cast<size_t>(i)] ==
                                     static_cast<int>(n - size + static_cast<size_t>(i)))
                    --i;
                if (i < 0) break;
                ++pick[static_cast<size_t>(i)];
                for (size_t j = static_cast<size_t>(i) + 1; j < size; ++j)
                    pick[j] = pick[j - 1] + 1;
            }
        }
        return false;
    }

private:
    std::vector<int> pool_;
};

inline std::vector<Rational> subset_column_sum(const RationalMatrix& m,
                                               const std::vector<int>& subset) {
    std::vector<Rational> sum(m.rows(), Rational(0));
    for (int c : subset)
        for (size_t r = 0; r < m.rows(); ++r) sum[r] += m.at(r, static_cast<size_t>(c));
    return sum;
}

inline bool is_zero_vector(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

class ColumnsSearch {
public:
    explicit ColumnsSearch(const RationalMatrix& m) : m_(m), v_(m.cols()) {}

    std::optional<ColumnsCertificate> run() {
        std::vector<int> all(v_);
        for (size_t i = 0; i < v_; ++i) all[i] = static_cast<int>(i);
        std::vector<std::vector<int>> blocks;
        if (dfs(0u, all, blocks)) {
            ColumnsCertificate cert;
            cert.blocks = blocks;
            attach_witnesses(cert);
            return cert;
        }
        return std::nullopt;
    }

private:
    bool dfs(uint32_t used, const std::vector<int>& remaining,
             std::vector<std::vector<int>>& blocks) {
        if (remaining.empty()) return true;
        if (dead_.contains(used)) return false;
        const bool first_block = (used == 0);
        const SpanBasis* span = first_block ? nullptr : &span_for(used);
        bool found = SubsetEnumerator(remaining).for_each([&](const std::vector<int>& subset) {
            auto sum = subset_column_sum(m_, subset);
            if (first_block ? !is_zero_vector(sum) : !span->contains(sum)) return false;
            uint32_t mask = used;
            for (int c : subset) mask |= (1u << c);
            std::vector<int> rest;
            rest.reserve(remaining.size() - subset.size());
            size_t k = 0;
            for (int c : remaining) {
                if (k < subset.size() && subset[k] == c) {
                    ++k;
                    continue;
                }
                rest.push_back(c);
            }
            blocks.push_back(subset);
            if (dfs(mask, rest, blocks)) return true;
            blocks.pop_back();
            return false;
        });
        if (!found) dead_.insert(used);
        return found;
    }

    const SpanBasis& span_for(uint32_t used) {
        auto it = spans_.find(used);
        if (it != spans_.end()) return it->second;
        SpanBasis basis(m_.rows());
        for (size_t c = 0; c < v_; ++c)
            if (used & (1u << c)) basis.add(m_.column(c));
        return spans_.emplace(used, std::move(basis)).first->second;
    }

    void attach_witnesses(ColumnsCertificate& cert) const {
        std::vector<int> earlier;
        for (size_t t = 0; t < cert.blocks.size(); ++t) {
            if (t >= 1) {
                std::vector<std::vector<Rational>> cols;
                cols.reserve(earlier.size());
                for (int c : earlier) cols.push_back(m_.column(static_cast<size_t>(c)));
                auto target = subset_column_sum(m_, cert.blocks[t]);
                auto combo = solve_combination(cols, target);
                if (!combo) throw std::logic_error("span check and witness solve disagree");
                ColumnsCertificate::Witness w;
                w.block = static_cast<int>(t);
                for (size_t j = 0; j < earlier.size(); ++j)
                    if ((*combo)[j] != 0) w.combination.emplace_back(earlier[j], (*combo)[j]);
                cert.witnesses.push_back(std::move(w));
            }
            earlier.insert(earlier.end(), cert.blocks[t].begin(), cert.blocks[t].end());
            std::sort(earlier.begin(), earlier.end());
        }
    }

    const RationalMatrix& m_;
    size_t v_;
    std::unordered_set<uint32_t> dead_;
    std::unordered_map<uint32_t, SpanBasis> spans_;
};

}  // namespace detail

// Complete search for a columns-condition certificate; nullopt means no
// ordered partition works.
inline std::optional<ColumnsCertificate> columns_condition(const RationalMatrix& m) {
    if (m.cols() > 24) throw std::invalid_argument("columns_condition: too many columns");
    return detail::ColumnsSearch(m).run();
}

// Checks every certificate invariant from scratch; never trusts the search.
inline bool verify_certificate(const RationalMatrix& m, const ColumnsCertificate& cert) {
    const size_t v = m.cols();
    if (cert.blocks.empty()) return false;
    std::vector<char> seen(v, 0);
    for (const auto& block : cert.blocks) {
        if (block.empty()) return false;
        for (int c : block) {
            if (c < 0 || static_cast<size_t>(c) >= v) return false;
            if (seen[static_cast<size_t>(c)]) return false;
            seen[static_cast<size_t>(c)] = 1;
        }
    }
    for (char s : seen)
        if (!s) return false;
    if (!detail::is_zero_vector(detail::subset_column_sum(m, cert.blocks[0]))) return false;

    if (cert.witnesses.size() != cert.blocks.size() - 1) return false;
    std::vector<char> earlier(v, 0);
    for (int c : cert.blocks[0]) earlier[static_cast<size_t>(c)] = 1;
    for (size_t t = 1; t < cert.blocks.size(); ++t) {
        const auto* witness = &cert.witnesses[t - 1];
        if (witness->block != static_cast<int>(t)) return false;
        auto target = detail::subset_column_sum(m, cert.blocks[t]);
        std::vector<Rational> combo(m.rows(), Rational(0));
        for (const auto& [c, coeff] : witness->combination) {
            if (c < 0 || static_cast<size_t>(c) >= v || !earlier[static_cast<size_t>(c)])
                return false;
            for (size_t r = 0; r < m.rows(); ++r) combo[r] += coeff * m.at(r, static_cast<size_t>(c));
        }
        if (combo != target) return false;
        for (int c : cert.blocks[t]) earlier[static_cast<size_t>(c)] = 1;
    }
    return true;
}

// First nonempty index subset (0-based) with zero coefficient sum, in the
// fixed enumeration order; nullopt if none exists.
inline std::optional<std::vector<int>> subset_sum_zero(const std::vector<Rational>& coeffs) {
    for (const auto& c : coeffs)
        if (c == 0) throw std::invalid_argument("subset_sum_zero: zero coefficient");
    std::vector<int> all(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) all[i] = static_cast<int>(i);
    std::optional<std::vector<int>> result;
    detail::SubsetEnumerator(all).for_each([&](const std::vector<int>& subset) {
        Rational sum(0);
        for (int i : subset) sum += coeffs[static_cast<size_t>(i)];
        if (sum == 0) {
            result = subset;
            return true;
        }
        return false;
    });
    return result;
}

// Verdict for the system A x^r = 0 over the positive reals. The decision is
// r-independent: substituting x -> x^(1/r) is a bijection of the positive
// reals, so partition regularity of A x^r = 0 matches that of A x = 0,
// which is the columns condition. For rational matrices the span over Q and
// over R of a set of columns contain the same rational vectors, so deciding
// over Q is sound.
struct PrVerdict {
    bool partition_regular = false;
    unsigned r = 1;
    std::optional<ColumnsCertificate> certificate;
};

inline PrVerdict linear_pr_verdict(const RationalMatrix& m, unsigned r) {
    if (r == 0) throw std::invalid_argument("exponent r must be positive");
    PrVerdict v;
    v.r = r;
    v.certificate = columns_condition(m);
    v.partition_regular = v.certificate.has_value();
    return v;
}

}  // namespace rado
