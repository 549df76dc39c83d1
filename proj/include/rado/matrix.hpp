#pragma once

// Dense rational matrices, exact span membership and linear solving by
// Gaussian elimination over Q.

#include "rado/polynomial.hpp"

#include <optional>
#include <vector>

namespace rado {

class RationalMatrix {
public:
    RationalMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {
        if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
    }

    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        if (rows.empty() || rows[0].empty())
            throw std::invalid_argument("matrix dimensions must be positive");
        RationalMatrix m(rows.size(), rows[0].size());
        for (size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
            for (size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> column(size_t c) const {
        std::vector<Rational> out(rows_);
        for (size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
        return out;
    }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Incremental exact span of rational vectors (row-echelon basis).
class SpanBasis {
public:
    explicit SpanBasis(size_t dim) : dim_(dim) {}

    // Reduces v against the basis; returns the residual.
    std::vector<Rational> reduce(std::vector<Rational> v) const {
        for (const auto& b : basis_) {
            const Rational& lead = v[b.pivot];
            if (lead != 0) {
                Rational f = lead;  // basis rows are normalized to pivot 1
                for (size_t i = 0; i < dim_; ++i) v[i] -= f * b.row[i];
            }
        }
        return v;
    }

    bool contains(const std::vector<Rational>& v) const {
        auto r = reduce(v);
        for (const auto& x : r)
            if (x != 0) return false;
        return true;
    }

    // Adds v to the span; returns false if it was already contained.
    bool add(std::vector<Rational> v) {
        v = reduce(std::move(v));
        size_t pivot = dim_;
        for (size_t i = 0; i < dim_; ++i)
            if (v[i] != 0) {
                pivot = i;
                break;
            }
        if (pivot == dim_) return false;
        Rational lead = v[pivot];
        for (auto& x : v) x /= lead;
        basis_.push_back({pivot, std::move(v)});
        std::sort(basis_.begin(), basis_.end(),
                  [](const Entry& a, const Entry& b) { return a.pivot < b.pivot; });
        return true;
    }

    size_t rank() const { return basis_.size(); }

private:
    struct Entry {
        size_t pivot;
        std::vector<Rational> row;
    };
    size_t dim_;
    std::vector<Entry> basis_;
};

// Solves sum_j coeff_j * columns[j] = target exactly; free variables are 0.
inline std::optional<std::vector<Rational>> solve_combination(
    const std::vector<std::vector<Rational>>& columns, const std::vector<Rational>& target) {
    if (columns.empty()) {
        for (const auto& x : target)
            if (x != 0) return std::nullopt;
        return std::vector<Rational>{};
    }
    size_t dim = columns[0].size();
    size_t n = columns.size();
    // Augmented matrix [columns | target], eliminated with column tracking.
    std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(n + 1, Rational(0)));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < dim; ++i) a[i][j] = columns[j][i];
    for (size_t i = 0; i < dim; ++i) a[i][n] = target[i];

    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < dim; ++col) {
        size_t sel = row;
        while (sel < dim && a[sel][col] == 0) ++sel;
        if (sel == dim) continue;
        std::swap(a[sel], a[row]);
        Rational lead = a[row][col];
        for (size_t j = col; j <= n; ++j) a[row][j] /= lead;
        for (size_t i = 0; i < dim; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = col; j <= n; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t i = row; i < dim; ++i)
        if (a[i][n] != 0) return std::nullopt;  // inconsistent
    std::vector<Rational> coeffs(n, Rational(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) coeffs[pivot_col[i]] = a[i][n];
    return coeffs;
}

// Extracts the coefficient matrix of a homogeneous linear system: every
// monomial must be a single variable of degree one. Columns follow the
// system's variable order.
inline std::optional<RationalMatrix> linear_system_matrix(const PolySystem& sys) {
    if (sys.n_polys() == 0 || sys.n_vars() == 0) return std::nullopt;
    RationalMatrix m(sys.n_polys(), sys.n_vars());
    for (size_t i = 0; i < sys.n_polys(); ++i) {
        for (const auto& t : sys.poly(i).terms()) {
            if (t.powers.size() != 1 || t.powers[0].second != 1) return std::nullopt;
            m.at(i, static_cast<size_t>(t.powers[0].first)) += t.coeff;
        }
    }
    return m;
}

}  // namespace rado
