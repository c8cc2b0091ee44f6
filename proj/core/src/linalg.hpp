#pragma once

// Internal exact linear algebra over ℚ (not installed).

#include <cstddef>
#include <vector>

#include "fanobig/rational.hpp"

namespace fanobig::linalg {

using Matrix = std::vector<std::vector<Rational>>;

enum class SolveKind { Unique, Underdetermined, Inconsistent };

struct SolveResult {
    SolveKind kind;
    std::vector<Rational> solution;  // meaningful only when kind == Unique
};

/// Solves A·x = b exactly by Gaussian elimination (A is m×n, m ≥ 0).
inline SolveResult solve_exact(Matrix a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[row]);
        std::swap(b[pivot], b[row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            const Rational factor = a[r][col] / a[row][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[row][c];
            b[r] -= factor * b[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (!b[r].is_zero()) return {SolveKind::Inconsistent, {}};
    if (pivot_col_of_row.size() < cols) return {SolveKind::Underdetermined, {}};
    std::vector<Rational> x(cols);
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
        const std::size_t col = pivot_col_of_row[r];
        x[col] = b[r] / a[r][col];
    }
    return {SolveKind::Unique, std::move(x)};
}

/// Rank of a matrix over ℚ.
inline std::size_t rank_exact(Matrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][col].is_zero()) continue;
            const Rational factor = a[r][col] / a[rank][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace fanobig::linalg
