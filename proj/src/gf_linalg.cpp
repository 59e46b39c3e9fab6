#include "matsplit/gf_linalg.hpp"

namespace matsplit {

RrefResult rref(const GfMatrix& m, const PrimeField& field) {
    RrefResult out;
    out.reduced = m;
    GfMatrix& a = out.reduced;
    const int rows = static_cast<int>(a.rows());
    const int cols = static_cast<int>(a.cols());
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i) {
            if (a(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) a.row(pivot).swap(a.row(row));
        const int scale = field.inv(a(row, col));
        for (int j = col; j < cols; ++j) a(row, j) = field.mul(a(row, j), scale);
        for (int i = 0; i < rows; ++i) {
            if (i == row || a(i, col) == 0) continue;
            const int factor = a(i, col);
            for (int j = col; j < cols; ++j) {
                a(i, j) = field.sub(a(i, j), field.mul(factor, a(row, j)));
            }
        }
        out.pivot_columns.push_back(col);
        ++row;
    }
    out.rank = static_cast<int>(out.pivot_columns.size());
    return out;
}

int rank_of(const GfMatrix& m, const PrimeField& field) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return rref(m, field).rank;
}

GfMatrix kernel_basis(const GfMatrix& m, const PrimeField& field) {
    const int cols = static_cast<int>(m.cols());
    RrefResult r = rref(m, field);
    std::vector<int> free_cols;
    free_cols.reserve(cols - r.rank);
    {
        std::size_t next_pivot = 0;
        for (int c = 0; c < cols; ++c) {
            if (next_pivot < r.pivot_columns.size() && r.pivot_columns[next_pivot] == c) {
                ++next_pivot;
            } else {
                free_cols.push_back(c);
            }
        }
    }
    GfMatrix basis(static_cast<int>(free_cols.size()), cols);
    basis.setZero();
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int f = free_cols[k];
        basis(static_cast<int>(k), f) = 1;
        for (std::size_t i = 0; i < r.pivot_columns.size(); ++i) {
            basis(static_cast<int>(k), r.pivot_columns[i]) =
                field.neg(r.reduced(static_cast<int>(i), f));
        }
    }
    if (basis.rows() == 0) return basis;
    // Canonicalize: the RREF of any basis of the kernel is unique.
    return rref(basis, field).reduced;
}

}  // namespace matsplit
