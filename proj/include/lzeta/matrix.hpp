/**
 * @file matrix.hpp
 * @brief Dense rational matrices with exact Gaussian elimination.
 *
 * Elimination always takes the first nonzero entry in a column as the pivot,
 * so results (including which solution is returned for an underdetermined
 * system) are deterministic.
 */
#pragma once

#include <lzeta/rational.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace lzeta {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    RationalMatrix transposed() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

namespace detail {

// In-place reduced row echelon form; returns pivot column per pivot row.
inline std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < pivot_cols && lead_row < m.rows(); ++c) {
        std::size_t p = lead_row;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != lead_row)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
        const Rational inv = Rational(1) / m(lead_row, c);
        for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, c).is_zero()) continue;
            const Rational f = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(lead_row, k);
        }
        pivots.push_back(c);
        ++lead_row;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank(const RationalMatrix& m) {
    RationalMatrix work = m;
    return detail::row_reduce(work, work.cols()).size();
}

/// Finds lambda with lambda * system == target (a combination of the rows).
/// Free coordinates are set to zero. Returns nullopt when the target is not
/// in the row space.
inline std::optional<std::vector<Rational>> solve_membership(const RationalMatrix& system,
                                                             std::span<const Rational> target) {
    if (target.size() != system.cols())
        throw std::invalid_argument("solve_membership: target length does not match column count");
    const std::size_t n_unknowns = system.rows();
    const std::size_t n_eq = system.cols();
    // Transposed augmented system: A^T lambda = target^T.
    RationalMatrix aug(n_eq, n_unknowns + 1);
    for (std::size_t r = 0; r < n_unknowns; ++r)
        for (std::size_t c = 0; c < n_eq; ++c) aug(c, r) = system(r, c);
    for (std::size_t c = 0; c < n_eq; ++c) aug(c, n_unknowns) = target[c];

    auto pivots = detail::row_reduce(aug, n_unknowns);
    for (std::size_t r = pivots.size(); r < n_eq; ++r)
        if (!aug(r, n_unknowns).is_zero()) return std::nullopt;

    std::vector<Rational> lambda(n_unknowns);
    for (std::size_t i = 0; i < pivots.size(); ++i) lambda[pivots[i]] = aug(i, n_unknowns);
    return lambda;
}

/// lambda * m, the row combination.
inline std::vector<Rational> combine_rows(const RationalMatrix& m, std::span<const Rational> lambda) {
    if (lambda.size() != m.rows()) throw std::invalid_argument("combine_rows: size mismatch");
    std::vector<Rational> out(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (lambda[r].is_zero()) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] += lambda[r] * m(r, c);
    }
    return out;
}

}  // namespace lzeta
