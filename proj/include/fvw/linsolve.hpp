#pragma once

#include <optional>
#include <vector>

#include "fvw/scalar.hpp"

namespace fvw {

// Exact Gaussian elimination over the scalar field. Solves A x = b for
// several right-hand sides at once; returns nothing if any system is
// inconsistent. Underdetermined systems take the pivot-variable solution
// with free variables at zero.
inline std::optional<std::vector<std::vector<Scalar>>>
solve_linear(std::vector<std::vector<Scalar>> a, std::vector<std::vector<Scalar>> rhs) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    const std::size_t nrhs = rhs.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t k = 0; k < nrhs; ++k) std::swap(rhs[k][p], rhs[k][r]);
        Scalar inv = a[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (std::size_t k = 0; k < nrhs; ++k) rhs[k][r] = rhs[k][r] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Scalar f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
            for (std::size_t k = 0; k < nrhs; ++k) rhs[k][i] = rhs[k][i] - f * rhs[k][r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    // consistency: zero rows must have zero rhs
    for (std::size_t i = r; i < rows; ++i)
        for (std::size_t k = 0; k < nrhs; ++k)
            if (!rhs[k][i].is_zero()) return std::nullopt;
    std::vector<std::vector<Scalar>> out(nrhs, std::vector<Scalar>(cols, Scalar(0)));
    for (std::size_t k = 0; k < nrhs; ++k)
        for (std::size_t i = 0; i < pivot_col.size(); ++i) out[k][pivot_col[i]] = rhs[k][i];
    return out;
}

} // namespace fvw
