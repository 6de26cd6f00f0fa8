#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "kovacic/polynomial.hpp"
#include "kovacic/surd.hpp"

namespace kovacic {

/// Solves M a = rhs exactly by Gaussian elimination (first nonzero pivot).
/// Free unknowns are set to zero. Returns nullopt when the system is inconsistent.
inline std::optional<std::vector<SurdNumber>> gauss_solve(std::vector<std::vector<SurdNumber>> m,
                                                          std::vector<SurdNumber> rhs,
                                                          std::size_t unknowns) {
    const std::size_t rows = m.size();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < unknowns && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        std::swap(rhs[piv], rhs[row]);
        SurdNumber inv = m[row][col].inverse();
        for (std::size_t j = col; j < unknowns; ++j) m[row][j] *= inv;
        rhs[row] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            SurdNumber f = m[i][col];
            for (std::size_t j = col; j < unknowns; ++j) m[i][j] -= f * m[row][j];
            rhs[i] -= f * rhs[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i)
        if (!rhs[i].is_zero()) return std::nullopt;
    std::vector<SurdNumber> sol(unknowns);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) sol[pivot_col[i]] = rhs[i];
    return sol;
}

/// Finds a_0..a_{k-1} with target + sum a_j basis[j] = 0 as a polynomial identity.
inline std::optional<std::vector<SurdNumber>> solve_linear_combination(const Polynomial& target,
                                                                       const std::vector<Polynomial>& basis) {
    int deg = target.degree();
    for (const auto& b : basis) deg = std::max(deg, b.degree());
    if (deg < 0) return std::vector<SurdNumber>(basis.size());
    std::vector<std::vector<SurdNumber>> m;
    std::vector<SurdNumber> rhs;
    for (int k = 0; k <= deg; ++k) {
        std::vector<SurdNumber> rowv;
        bool any = !target.coeff(k).is_zero();
        for (const auto& b : basis) {
            rowv.push_back(b.coeff(k));
            any = any || !rowv.back().is_zero();
        }
        if (!any) continue;
        m.push_back(std::move(rowv));
        rhs.push_back(-target.coeff(k));
    }
    return gauss_solve(std::move(m), std::move(rhs), basis.size());
}

} // namespace kovacic
