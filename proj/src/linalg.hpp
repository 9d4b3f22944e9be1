// Small dense exact linear algebra over Q (internal).
#pragma once

#include "equigen/rational.hpp"

#include <optional>
#include <vector>

namespace equigen::detail {

struct LinearSolve {
    enum class Status { Unique, Inconsistent, UnderDetermined };
    Status status = Status::Inconsistent;
    std::vector<Rational> solution;  // valid when Unique
};

// Solves A x = b by fraction-free-ish Gaussian elimination; A is rows x cols,
// row-major. Reports a unique solution, inconsistency, or an underdetermined
// (consistent, rank < cols) system.
inline LinearSolve solve_linear(std::vector<std::vector<Rational>> a,
                                std::vector<Rational> b) {
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<int> pivot_col_of_row;
    std::vector<int> pivot_row_of_col(cols, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        std::swap(b[sel], b[r]);
        const Rational inv = 1 / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_row_of_col[c] = static_cast<int>(r);
        ++r;
    }
    LinearSolve out;
    for (size_t i = r; i < rows; ++i) {
        if (b[i] != 0) {
            out.status = LinearSolve::Status::Inconsistent;
            return out;
        }
    }
    if (r < cols) {
        out.status = LinearSolve::Status::UnderDetermined;
        return out;
    }
    out.status = LinearSolve::Status::Unique;
    out.solution.assign(cols, Rational(0));
    for (size_t c = 0; c < cols; ++c) out.solution[c] = b[pivot_row_of_col[c]];
    return out;
}

}  // namespace equigen::detail
