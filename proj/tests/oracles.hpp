#pragma once

// Test-only brute-force oracles, kept independent of the library code
// paths they check.

#include <vector>

#include "ada/classes.hpp"
#include "ada/rational.hpp"
#include "ada/young.hpp"

namespace oracles {

// Complement by explicit box subtraction: mark the cells of y inside an
// L x b grid, flip, rotate by a half turn, and read the column heights
// back off the grid.
inline ada::YoungDiagram complement_by_box(const ada::YoungDiagram& y, int box_height) {
    const int big_l = y.column_count();
    std::vector<std::vector<bool>> grid(static_cast<std::size_t>(big_l),
                                        std::vector<bool>(static_cast<std::size_t>(box_height), false));
    for (int c = 0; c < big_l; ++c)
        for (int row = 0; row < y.columns()[static_cast<std::size_t>(c)]; ++row)
            grid[static_cast<std::size_t>(c)][static_cast<std::size_t>(row)] = true;

    std::vector<int> cols;
    for (int c = 0; c < big_l; ++c) {
        // flipped cell (c, row) of the rotated grid comes from
        // (L-1-c, b-1-row) of the original
        int height = 0;
        for (int row = 0; row < box_height; ++row) {
            const bool filled = grid[static_cast<std::size_t>(big_l - 1 - c)]
                                    [static_cast<std::size_t>(box_height - 1 - row)];
            if (!filled)
                ++height;
            else
                break;
        }
        if (height > 0) cols.push_back(height);
    }
    return ada::YoungDiagram(std::move(cols));
}

using RatMatrix = std::vector<std::vector<ada::Rat>>;

// Rank by Gaussian elimination over exact rationals.
inline int matrix_rank(RatMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    int rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[pivot_row]);
        for (std::size_t row = 0; row < rows; ++row) {
            if (row == pivot_row || m[row][col].is_zero()) continue;
            const ada::Rat factor = m[row][col] / m[pivot_row][col];
            for (std::size_t k = col; k < cols; ++k)
                m[row][k] -= factor * m[pivot_row][k];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

// Exact value of an eigenvalue whose phase is 0 or 1/2.
inline ada::Rat eigenvalue_as_rat(const ada::Eigenvalue& e) {
    if (e.phase().is_zero()) return e.modulus();
    if (e.phase() == ada::Rat(1, 2)) return -e.modulus();
    throw std::domain_error("matrix oracle needs rational eigenvalues");
}

// Jordan-form representative of the class: one Jordan block per row of
// each diagram (rows are the block sizes; the bracket lists columns).
inline RatMatrix jordan_matrix(const ada::ConjugacyClass& c) {
    const int n = ada::class_rank(c);
    RatMatrix m(static_cast<std::size_t>(n), std::vector<ada::Rat>(static_cast<std::size_t>(n), ada::Rat(0)));
    int offset = 0;
    for (const auto& [eig, diagram] : c.parts()) {
        const ada::Rat value = eigenvalue_as_rat(eig);
        for (int block : diagram.rows()) {
            for (int i = 0; i < block; ++i) {
                m[static_cast<std::size_t>(offset + i)][static_cast<std::size_t>(offset + i)] = value;
                if (i + 1 < block)
                    m[static_cast<std::size_t>(offset + i)][static_cast<std::size_t>(offset + i + 1)] =
                        ada::Rat(1);
            }
            offset += block;
        }
    }
    return m;
}

// Leg dimensions d_i = rk((A - xi_1)...(A - xi_{i-1})) computed on the
// actual matrices.
inline ada::Leg leg_by_matrices(const ada::ConjugacyClass& c, const ada::Marking& xi) {
    const int n = ada::class_rank(c);
    const RatMatrix a = jordan_matrix(c);
    RatMatrix product(static_cast<std::size_t>(n),
                      std::vector<ada::Rat>(static_cast<std::size_t>(n), ada::Rat(0)));
    for (int i = 0; i < n; ++i) product[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = ada::Rat(1);

    ada::Leg out;
    out.dims.push_back(n);
    for (std::size_t step = 0; step + 1 < xi.entries.size(); ++step) {
        const ada::Rat value = eigenvalue_as_rat(xi.entries[step]);
        RatMatrix factor = a;
        for (int i = 0; i < n; ++i)
            factor[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] -= value;
        RatMatrix next(static_cast<std::size_t>(n),
                       std::vector<ada::Rat>(static_cast<std::size_t>(n), ada::Rat(0)));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (product[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].is_zero()) continue;
                for (int j = 0; j < n; ++j)
                    next[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                        product[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                        factor[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            }
        product = std::move(next);
        out.dims.push_back(matrix_rank(product));
    }
    while (!out.dims.empty() && out.dims.back() == 0) out.dims.pop_back();
    return out;
}

} // namespace oracles
